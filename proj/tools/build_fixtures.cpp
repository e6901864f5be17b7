// Rebuilds the example fixtures from explicit constructions.
//
// Each group is assembled from the structure description attached to it
// (finite-field affine maps, semidirect products found by a seeded search),
// checked against its expected class sizes, moved to a smaller faithful coset
// action when one is found, and written in fixture grammar.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include <CLI11.hpp>

#include "csgroups/construct.hpp"
#include "csgroups/errors.hpp"
#include "csgroups/structure.hpp"

namespace {

  using namespace csg;
  using Sizes = std::vector<std::uint64_t>;

  std::string show(Sizes const& s) {
    std::string o = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      o += (i ? "," : "") + std::to_string(s[i]);
    }
    return o + "}";
  }

  FiniteGroup regenerate(FiniteGroup const& g, std::vector<Elem> const& gens, std::string name) {
    std::vector<Permutation> ps;
    for (Elem e : gens) {
      ps.push_back(g.element(e));
    }
    return FiniteGroup(close(ps, g.degree(), g.order()), std::move(name), {});
  }

  // Multiplication in GF(2^k) modulo `poly`.
  unsigned gf_mul(unsigned a, unsigned b, unsigned k, unsigned poly) {
    unsigned r = 0;
    while (b != 0) {
      if (b & 1U) {
        r ^= a;
      }
      b >>= 1;
      a <<= 1;
      if (a & (1U << k)) {
        a ^= poly;
      }
    }
    return r;
  }

  unsigned gf_pow(unsigned a, unsigned e, unsigned k, unsigned poly) {
    unsigned r = 1;
    while (e-- != 0) {
      r = gf_mul(r, a, k, poly);
    }
    return r;
  }

  // GF(16) acted on by x -> w x^s + b with w a fifth root of unity and s in
  // the order-two subgroup of Frobenius: ((C2^4) : C5) : C2.
  FiniteGroup affine_f16() {
    unsigned const k = 4, poly = 0x13, n = 16;
    unsigned const w = gf_pow(2, 3, k, poly);
    std::vector<std::uint32_t> shift(n), scale(n), frob(n);
    for (unsigned x = 0; x < n; ++x) {
      shift[x] = x ^ 1U;
      scale[x] = gf_mul(w, x, k, poly);
      frob[x]  = gf_pow(x, 4, k, poly);
    }
    return FiniteGroup(close({Permutation(shift), Permutation(scale), Permutation(frob)}, n),
                       "g160_234", {});
  }

  // PSL(2, 8) on the projective line over GF(8); point 8 is infinity.
  FiniteGroup psl2_8() {
    unsigned const k = 3, poly = 0xB, n = 9, inf = 8;
    std::vector<std::uint32_t> shift(n), scale(n), invert(n);
    for (unsigned x = 0; x < 8; ++x) {
      shift[x] = x ^ 1U;
      scale[x] = gf_mul(2, x, k, poly);
      invert[x] = x == 0 ? inf : gf_pow(x, 6, k, poly);
    }
    shift[inf] = scale[inf] = inf;
    invert[inf] = 0;
    return FiniteGroup(close({Permutation(shift), Permutation(scale), Permutation(invert)}, n),
                       "psl2_8", {});
  }

  // C15 : X with X = C2^3 : C4. The first matrix of order dividing 4 and the
  // first index-two K <= X such that elements outside K have centraliser of
  // order 8 while elements of K have |C_X(k)|, |C_K(k)| >= 8; X \ K inverts
  // C15.
  FiniteGroup order_480() {
    std::vector<Permutation> tgens;
    for (unsigned i = 0; i < 3; ++i) {
      std::vector<std::uint32_t> im(8);
      for (unsigned v = 0; v < 8; ++v) {
        im[v] = v ^ (1U << i);
      }
      tgens.emplace_back(im);
    }
    FiniteGroup const cube(close(tgens, 8), "C2^3", {});
    auto translation = [&](unsigned v) {
      std::vector<std::uint32_t> im(8);
      for (unsigned u = 0; u < 8; ++u) {
        im[u] = u ^ v;
      }
      return *cube.index_of(Permutation(im));
    };
    FiniteGroup const c4  = cyclic(4);
    FiniteGroup const c15 = cyclic(15);
    for (unsigned m = 0; m < 512; ++m) {
      unsigned col[3] = {m & 7U, (m >> 3) & 7U, (m >> 6) & 7U};
      auto     apply  = [&](unsigned v) {
        unsigned r = 0;
        for (unsigned i = 0; i < 3; ++i) {
          if ((v >> i) & 1U) {
            r ^= col[i];
          }
        }
        return r;
      };
      std::set<unsigned> image;
      bool               order4 = true;
      for (unsigned v = 0; v < 8; ++v) {
        image.insert(apply(v));
        order4 = order4 && apply(apply(apply(apply(v)))) == v;
      }
      if (image.size() != 8 || !order4) {
        continue;
      }
      std::vector<Elem> act;
      for (Elem gen : cube.generators()) {
        act.push_back(translation(apply(cube.element(gen)(0))));
      }
      FiniteGroup const x = semidirect_product(cube, c4, {act});
      for (auto const& k : normal_subgroups(x)) {
        if (k.order() != 16) {
          continue;
        }
        bool good = true;
        for (Elem e = 0; e < x.order() && good; ++e) {
          Bitset const c = centralizer(x, e);
          good = k.contains(e) ? c.count() >= 8 && c.count_and(k.members) >= 8 : c.count() == 8;
        }
        if (!good) {
          continue;
        }
        Elem const                     gen = c15.generators()[0];
        std::vector<std::vector<Elem>> outer;
        for (Elem s : x.generators()) {
          outer.push_back({k.contains(s) ? gen : c15.inv(gen)});
        }
        return semidirect_product(c15, x, outer);
      }
    }
    throw csg::Error("no order-480 construction found");
  }

  // Every invariant used to tell candidate Sylow subgroups apart.
  Sizes signature(FiniteGroup const& g) {
    Sizes s = conjugacy_classes(g).cs();
    s.push_back(0);
    s.push_back(center(g).order());
    s.push_back(derived_subgroup(g, whole_group(g)).order());
    std::map<std::uint32_t, std::uint64_t> counts;
    for (Elem x = 0; x < g.order(); ++x) {
      ++counts[g.order_of(x)];
    }
    for (auto [o, c] : counts) {
      s.push_back(o);
      s.push_back(c);
    }
    return s;
  }

  // N : C3 for every order-three automorphism of N, one per signature.
  std::vector<FiniteGroup> order3_extensions(FiniteGroup const& n) {
    auto const&                    gens = n.generators();
    std::size_t const              k    = gens.size();
    std::vector<std::vector<Elem>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (Elem x = 0; x < n.order(); ++x) {
        if (n.order_of(x) == n.order_of(gens[i])) {
          cand[i].push_back(x);
        }
      }
    }
    FiniteGroup const        c3 = cyclic(3);
    std::vector<FiniteGroup> out;
    std::set<Sizes>          seen;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Elem> im(k);
      for (std::size_t i = 0; i < k; ++i) {
        im[i] = cand[i][idx[i]];
      }
      auto const full = extend_to_automorphism(n, im);
      if (!full.empty() && im != gens) {
        bool cube = true;
        for (Elem g : gens) {
          cube = cube && full[full[full[g]]] == g;
        }
        if (cube) {
          FiniteGroup p = semidirect_product(n, c3, {im});
          if (seen.insert(signature(p)).second) {
            out.push_back(std::move(p));
          }
        }
      }
      std::size_t i = 0;
      while (i < k && ++idx[i] == cand[i].size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == k) {
        break;
      }
    }
    return out;
  }

  // P : C2 where the involution fixes or inverts each member of a random
  // generating set of P. Every involutory automorphism has this form for a
  // suitable generating set, so the seeded search is complete in the limit.
  std::optional<FiniteGroup> involution_extension(FiniteGroup const& p,
                                                  Sizes const&       target,
                                                  int                trials,
                                                  std::mt19937_64&   rng) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(p.order() - 1));
    FiniteGroup const                   c2 = cyclic(2);
    for (int t = 0; t < trials; ++t) {
      std::vector<Elem> gs;
      Subgroup          h = trivial_subgroup(p);
      while (h.order() < p.order()) {
        Elem const x = pick(rng);
        if (!h.contains(x)) {
          gs.push_back(x);
          h = *extend(p, h, {x});
        }
      }
      FiniteGroup const q  = regenerate(p, gs, "P");
      auto const&       qg = q.generators();
      std::vector<Elem> im;
      for (Elem g : qg) {
        im.push_back((rng() & 1U) != 0 ? q.inv(g) : g);
      }
      if (im == qg || extend_to_automorphism(q, im).empty()) {
        continue;
      }
      FiniteGroup g = semidirect_product(q, c2, {im});
      if (conjugacy_classes(g).cs() == target) {
        return g;
      }
    }
    return std::nullopt;
  }

  FiniteGroup three_group_example(FiniteGroup const& base, Sizes const& target, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (auto const& p : order3_extensions(base)) {
      if (auto g = involution_extension(p, target, 400, rng)) {
        return std::move(*g);
      }
    }
    throw csg::Error("no extension with class sizes " + show(target));
  }

  // Intersection of the conjugates of h.
  Bitset core_of(FiniteGroup const& g, Subgroup const& h) {
    std::unordered_set<Bitset, BitsetHash> seen{h.members};
    std::vector<Subgroup>                  orbit{h};
    Bitset                                 meet = h.members;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : g.generators()) {
        Subgroup c = conjugate(g, orbit[i], s);
        if (seen.insert(c.members).second) {
          meet &= c.members;
          orbit.push_back(std::move(c));
        }
      }
    }
    return meet;
  }

  // Largest core-free subgroup among Sylow subgroups, cyclic subgroups and
  // joins of two cyclic subgroups; the group acts faithfully on its cosets.
  FiniteGroup reduce_degree(FiniteGroup const& g, std::string const& name) {
    std::vector<Subgroup>                  cands;
    std::unordered_set<Bitset, BitsetHash> seen;
    auto                                   add = [&](Subgroup s) {
      if (s.order() > 1 && s.order() < g.order() && seen.insert(s.members).second) {
        cands.push_back(std::move(s));
      }
    };
    for (auto p : prime_divisors(g.order())) {
      add(sylow(g, p));
    }
    std::vector<Subgroup> cyclics;
    for (Elem x = 1; x < g.order(); ++x) {
      Subgroup c = generate(g, {x});
      if (seen.insert(c.members).second) {
        cyclics.push_back(c);
        cands.push_back(std::move(c));
      }
    }
    for (std::size_t i = 0; i < cyclics.size(); ++i) {
      for (std::size_t j = i + 1; j < cyclics.size(); ++j) {
        if (auto s = extend(g, cyclics[i], cyclics[j].gens, g.order() / 2)) {
          add(std::move(*s));
        }
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](Subgroup const& a, Subgroup const& b) { return a.order() > b.order(); });
    std::size_t const regular = g.order();
    for (auto const& h : cands) {
      if (g.order() / h.order() >= std::min<std::size_t>(regular, g.degree())) {
        break;
      }
      if (core_of(g, h).count() == 1) {
        return coset_action(g, h, name).image;
      }
    }
    return regenerate(g, g.generators(), name);
  }

  struct Example {
    std::string              name;
    Sizes                    expected_cs;
    std::vector<std::string> comments;
    FiniteGroup (*build)();
  };

  FiniteGroup build_480() {
    return order_480();
  }
  FiniteGroup build_160() {
    return affine_f16();
  }
  FiniteGroup build_486() {
    return three_group_example(direct_product(cyclic(3), extraspecial(3)), {1, 2, 3, 18, 27}, 486);
  }
  FiniteGroup build_162() {
    return three_group_example(direct_product(cyclic(9), cyclic(3)), {1, 2, 3, 6, 27}, 162);
  }
  FiniteGroup build_psl() {
    return psl2_8();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App    app{"Rebuild the example group fixtures"};
  std::string out_dir = "fixtures";
  app.add_option("-o,--output", out_dir, "directory to write fixtures into");
  CLI11_PARSE(app, argc, argv);

  std::vector<Example> const examples{
      {"g480_166",
       {1, 2, 4, 60},
       {"C3 : (C5 : ((C2 x C2 x C2) : C4)), order 480",
        "built as C15 : (C2^3 : C4) with an index-two subgroup centralising C15"},
       build_480},
      {"g160_234",
       {1, 5, 20, 32},
       {"((C2 x C2 x C2 x C2) : C5) : C2, order 160",
        "affine maps x -> w x^s + b of GF(16), w^5 = 1, s in {1, 4}"},
       build_160},
      {"g486_176",
       {1, 2, 3, 18, 27},
       {"((C3 x ((C3 x C3) : C3)) : C3) : C2, order 486",
        "seeded search over (C3 x 3^(1+2)) : C3 extended by an involution"},
       build_486},
      {"g162_5",
       {1, 2, 3, 6, 27},
       {"((C9 x C3) : C3) : C2, order 162",
        "seeded search over (C9 x C3) : C3 extended by an involution"},
       build_162},
      {"psl2_8",
       {1, 56, 63, 72},
       {"PSL(2,8) on the projective line over GF(8), order 504"},
       build_psl},
  };

  std::filesystem::create_directories(out_dir);
  int status = 0;
  for (auto const& ex : examples) {
    FiniteGroup const raw     = ex.build();
    FiniteGroup const reduced = reduce_degree(raw, ex.name);
    Sizes const       cs      = conjugacy_classes(reduced).cs();
    if (cs != ex.expected_cs || reduced.order() != raw.order()) {
      std::cerr << ex.name << ": class sizes " << show(cs) << ", expected " << show(ex.expected_cs)
                << '\n';
      status = 1;
      continue;
    }
    std::vector<Permutation> gens;
    for (Elem e : reduced.generators()) {
      gens.push_back(reduced.element(e));
    }
    auto comments = ex.comments;
    comments.push_back("order " + std::to_string(reduced.order()) + ", class sizes " + show(cs));
    comments.push_back("generated by build_fixtures; see tools/export_fixtures.g for the GAP export");
    std::ofstream out(std::filesystem::path(out_dir) / (ex.name + ".txt"));
    write_fixture(out, ex.name, reduced.degree(), gens, comments);
    std::cout << ex.name << ": order " << reduced.order() << ", degree " << reduced.degree()
              << ", cs " << show(cs) << '\n';
  }
  return status;
}
