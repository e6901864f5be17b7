#include "csgroups/construct.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "csgroups/arith.hpp"
#include "csgroups/errors.hpp"

namespace csg {

  namespace {

    FiniteGroup from_generators(std::vector<Permutation> gens,
                                std::size_t              degree,
                                GroupSpec                spec,
                                std::size_t              cap = default_order_cap) {
      auto table = close(gens, degree, cap);
      auto name  = spec.to_string();
      return FiniteGroup(std::move(table), std::move(name), std::move(spec));
    }

    GroupSpec leaf(GroupKind kind, std::vector<std::int64_t> params = {}) {
      GroupSpec s;
      s.kind   = kind;
      s.params = std::move(params);
      return s;
    }

    Permutation cycle_on(std::size_t deg, std::vector<std::uint32_t> points) {
      return Permutation::from_cycles(deg, {std::move(points)});
    }

    std::vector<std::uint32_t> iota_points(std::uint32_t from, std::uint32_t to) {
      std::vector<std::uint32_t> out;
      for (std::uint32_t i = from; i < to; ++i) {
        out.push_back(i);
      }
      return out;
    }

    // Image of each table generator of g, given images of g.generators().
    std::vector<Elem> table_generator_images(FiniteGroup const&       g,
                                             std::vector<Elem> const& images) {
      auto const&       gens = g.generators();
      std::vector<Elem> out;
      for (std::size_t s = 0; s < g.table().generators().size(); ++s) {
        Elem const e = g.table().times_generator(0, s);
        if (e == 0) {
          out.push_back(0);
          continue;
        }
        auto const pos = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), e)
                                                  - gens.begin());
        out.push_back(images[pos]);
      }
      return out;
    }

    std::size_t checked_size(std::int64_t v, char const* what) {
      if (v < 1) {
        throw ParameterError(std::string(what) + " must be positive, got " + std::to_string(v));
      }
      return static_cast<std::size_t>(v);
    }

  }  // namespace

  FiniteGroup cyclic(std::size_t n) {
    if (n == 0) {
      throw ParameterError("cyclic(n) needs n >= 1");
    }
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle_on(n, iota_points(0, static_cast<std::uint32_t>(n))));
    }
    return from_generators(gens, n, leaf(GroupKind::cyclic, {static_cast<std::int64_t>(n)}));
  }

  FiniteGroup symmetric(std::size_t n) {
    if (n == 0) {
      throw ParameterError("sym(n) needs n >= 1");
    }
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle_on(n, {0, 1}));
    }
    if (n >= 3) {
      gens.push_back(cycle_on(n, iota_points(0, static_cast<std::uint32_t>(n))));
    }
    return from_generators(gens, n, leaf(GroupKind::symmetric, {static_cast<std::int64_t>(n)}));
  }

  FiniteGroup alternating(std::size_t n) {
    if (n == 0) {
      throw ParameterError("alt(n) needs n >= 1");
    }
    std::vector<Permutation> gens;
    if (n >= 3) {
      gens.push_back(cycle_on(n, {0, 1, 2}));
    }
    if (n >= 4) {
      auto const m = static_cast<std::uint32_t>(n);
      gens.push_back(n % 2 == 1 ? cycle_on(n, iota_points(0, m)) : cycle_on(n, iota_points(1, m)));
    }
    return from_generators(
        gens, n, leaf(GroupKind::alternating, {static_cast<std::int64_t>(n)}));
  }

  FiniteGroup dihedral(std::size_t n) {
    if (n == 0) {
      throw ParameterError("dihedral(n) needs n >= 1");
    }
    auto                     spec = leaf(GroupKind::dihedral, {static_cast<std::int64_t>(n)});
    std::vector<Permutation> gens;
    if (n == 1) {
      gens.push_back(cycle_on(2, {0, 1}));
      return from_generators(gens, 2, std::move(spec));
    }
    if (n == 2) {
      gens.push_back(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
      gens.push_back(Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
      return from_generators(gens, 4, std::move(spec));
    }
    std::vector<std::uint32_t> rot(n);
    std::vector<std::uint32_t> ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = static_cast<std::uint32_t>((i + 1) % n);
      ref[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    gens.emplace_back(rot);
    gens.emplace_back(ref);
    return from_generators(gens, n, std::move(spec));
  }

  FiniteGroup quaternion8() {
    // Units 1, i, j, k with signs; element (u, s) has point 2u + s, s = 1 for
    // the negative sign.
    static constexpr int unit_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign_mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto left_by = [](int u) {
      std::vector<std::uint32_t> img(8);
      for (int v = 0; v < 4; ++v) {
        for (int s = 0; s < 2; ++s) {
          int const w  = unit_mul[u][v];
          int const sg = sign_mul[u][v] ^ s;
          img[static_cast<std::size_t>(2 * v + s)] = static_cast<std::uint32_t>(2 * w + sg);
        }
      }
      return Permutation(img);
    };
    return from_generators({left_by(1), left_by(2)}, 8, leaf(GroupKind::quaternion8));
  }

  FiniteGroup extraspecial(std::size_t p) {
    if (!is_prime(p) || p == 2) {
      throw ParameterError("extraspecial(p) needs an odd prime, got " + std::to_string(p)
                           + " (use quaternion8 or dihedral(4) for p = 2)");
    }
    std::size_t const deg = p * p * p;
    auto point = [p](std::size_t a, std::size_t b, std::size_t c) {
      return static_cast<std::uint32_t>(((a % p) * p + (b % p)) * p + (c % p));
    };
    std::vector<std::uint32_t> x(deg);
    std::vector<std::uint32_t> y(deg);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        for (std::size_t c = 0; c < p; ++c) {
          // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
          x[point(a, b, c)] = point(a + 1, b, c + b);
          y[point(a, b, c)] = point(a, b + 1, c);
        }
      }
    }
    return from_generators({Permutation(x), Permutation(y)},
                           deg,
                           leaf(GroupKind::extraspecial_p3, {static_cast<std::int64_t>(p)}));
  }

  FiniteGroup frobenius(std::size_t p, std::size_t q) {
    if (!is_prime(p) || !is_prime(q) || p == q || (p - 1) % q != 0) {
      throw ParameterError("frobenius(p, q) needs distinct primes with q | p - 1, got ("
                           + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    std::size_t r = 2;
    for (; r < p; ++r) {
      std::size_t acc = 1;
      for (std::size_t k = 0; k < q; ++k) {
        acc = acc * r % p;
      }
      if (acc == 1) {
        break;
      }
    }
    std::vector<std::uint32_t> shift(p);
    std::vector<std::uint32_t> scale(p);
    for (std::size_t i = 0; i < p; ++i) {
      shift[i] = static_cast<std::uint32_t>((i + 1) % p);
      scale[i] = static_cast<std::uint32_t>(i * r % p);
    }
    return from_generators(
        {Permutation(shift), Permutation(scale)},
        p,
        leaf(GroupKind::frobenius_pq, {static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)}));
  }

  FiniteGroup make_named(GroupSpec const& spec, std::size_t cap) {
    auto param = [&spec](std::size_t i) -> std::int64_t {
      if (i >= spec.params.size()) {
        throw ParameterError(spec.to_string() + ": missing parameter");
      }
      return spec.params[i];
    };
    FiniteGroup g = [&]() {
      switch (spec.kind) {
        case GroupKind::cyclic:
          return cyclic(checked_size(param(0), "n"));
        case GroupKind::symmetric:
          return symmetric(checked_size(param(0), "n"));
        case GroupKind::alternating:
          return alternating(checked_size(param(0), "n"));
        case GroupKind::dihedral:
          return dihedral(checked_size(param(0), "n"));
        case GroupKind::quaternion8:
          return quaternion8();
        case GroupKind::extraspecial_p3:
          return extraspecial(checked_size(param(0), "p"));
        case GroupKind::frobenius_pq:
          return frobenius(checked_size(param(0), "p"), checked_size(param(1), "q"));
        default:
          throw ParameterError("make_named needs a leaf kind, got " + spec.to_string());
      }
    }();
    if (g.order() > cap) {
      throw OrderCapExceeded(cap, g.order());
    }
    return g;
  }

  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h, std::size_t cap) {
    if (g.order() * h.order() > cap) {
      throw OrderCapExceeded(cap, g.order() * h.order());
    }
    std::size_t const        dg  = g.degree();
    std::size_t const        dh  = h.degree();
    std::size_t const        deg = dg + dh;
    std::vector<Permutation> gens;
    for (auto const& p : g.table().generators()) {
      std::vector<std::uint32_t> img(deg);
      for (std::uint32_t i = 0; i < deg; ++i) {
        img[i] = i < dg ? p(i) : i;
      }
      gens.push_back(Permutation::unchecked(std::move(img)));
    }
    for (auto const& p : h.table().generators()) {
      std::vector<std::uint32_t> img(deg);
      for (std::uint32_t i = 0; i < deg; ++i) {
        img[i] = i < dg ? i : static_cast<std::uint32_t>(dg + p(i - static_cast<std::uint32_t>(dg)));
      }
      gens.push_back(Permutation::unchecked(std::move(img)));
    }
    GroupSpec spec;
    spec.kind     = GroupKind::direct_product;
    spec.children = {g.spec(), h.spec()};
    auto table    = close(gens, deg, cap);
    return FiniteGroup(std::move(table), g.name() + " x " + h.name(), std::move(spec));
  }

  std::vector<Elem> extend_to_automorphism(FiniteGroup const& n, std::vector<Elem> const& images) {
    if (images.size() != n.generators().size()) {
      return {};
    }
    for (auto e : images) {
      if (e >= n.order()) {
        return {};
      }
    }
    auto const        img = table_generator_images(n, images);
    auto const&       t   = n.table();
    std::size_t const k   = t.generators().size();
    std::vector<Elem> phi(n.order(), 0);
    for (Elem h = 1; h < n.order(); ++h) {
      phi[h] = n.mul(phi[t.parent(h)], img[t.via(h)]);
    }
    for (Elem h = 0; h < n.order(); ++h) {
      for (std::size_t s = 0; s < k; ++s) {
        if (phi[t.times_generator(h, s)] != n.mul(phi[h], img[s])) {
          return {};
        }
      }
    }
    std::vector<bool> hit(n.order(), false);
    for (auto e : phi) {
      if (hit[e]) {
        return {};
      }
      hit[e] = true;
    }
    return phi;
  }

  FiniteGroup semidirect_product(FiniteGroup const&                    n,
                                 FiniteGroup const&                    h,
                                 std::vector<std::vector<Elem>> const& action,
                                 std::size_t                           cap) {
    if (action.size() != h.generators().size()) {
      throw ActionError("action lists " + std::to_string(action.size())
                        + " automorphisms but H has " + std::to_string(h.generators().size())
                        + " generators");
    }
    std::vector<std::vector<Elem>> gen_aut;
    for (std::size_t i = 0; i < action.size(); ++i) {
      auto phi = extend_to_automorphism(n, action[i]);
      if (phi.empty()) {
        throw ActionError("image list for H generator " + std::to_string(i)
                          + " is not an automorphism of N");
      }
      gen_aut.push_back(std::move(phi));
    }

    // alpha[x] for every x in H, built along H's Schreier tree.
    auto const&       th  = h.table();
    std::size_t const k   = th.generators().size();
    std::size_t const nn  = n.order();
    std::vector<Elem> idn(nn);
    for (Elem i = 0; i < nn; ++i) {
      idn[i] = i;
    }
    std::vector<std::vector<Elem>> tgen_aut;
    for (std::size_t s = 0; s < k; ++s) {
      Elem const e = th.times_generator(0, s);
      if (e == 0) {
        tgen_aut.push_back(idn);
      } else {
        auto const& gens = h.generators();
        auto const  pos  = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), e)
                                                  - gens.begin());
        tgen_aut.push_back(gen_aut[pos]);
      }
    }
    auto compose_maps = [nn](std::vector<Elem> const& outer, std::vector<Elem> const& inner) {
      std::vector<Elem> r(nn);
      for (std::size_t i = 0; i < nn; ++i) {
        r[i] = outer[inner[i]];
      }
      return r;
    };
    std::vector<std::vector<Elem>> alpha(h.order());
    alpha[0] = idn;
    for (Elem x = 1; x < h.order(); ++x) {
      alpha[x] = compose_maps(alpha[th.parent(x)], tgen_aut[th.via(x)]);
    }
    for (Elem x = 0; x < h.order(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        if (alpha[th.times_generator(x, s)] != compose_maps(alpha[x], tgen_aut[s])) {
          throw ActionError("action does not respect the relations of H: element "
                            + std::to_string(x) + " times generator " + std::to_string(s));
        }
      }
    }

    if (nn * h.order() > cap) {
      throw OrderCapExceeded(cap, nn * h.order());
    }
    std::size_t const hh  = h.order();
    std::size_t const deg = nn * hh;
    auto point = [hh](Elem a, Elem x) { return static_cast<std::uint32_t>(a * hh + x); };

    std::vector<Permutation> gens;
    for (Elem g : n.generators()) {
      std::vector<std::uint32_t> img(deg);
      for (Elem a = 0; a < nn; ++a) {
        for (Elem x = 0; x < hh; ++x) {
          img[point(a, x)] = point(n.mul(g, a), x);
        }
      }
      gens.push_back(Permutation::unchecked(std::move(img)));
    }
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
      Elem const                 s = h.generators()[i];
      std::vector<std::uint32_t> img(deg);
      for (Elem a = 0; a < nn; ++a) {
        for (Elem x = 0; x < hh; ++x) {
          img[point(a, x)] = point(gen_aut[i][a], h.mul(s, x));
        }
      }
      gens.push_back(Permutation::unchecked(std::move(img)));
    }
    GroupSpec spec;
    spec.kind     = GroupKind::semidirect_product;
    spec.children = {n.spec(), h.spec()};
    auto table    = close(gens, deg, cap);
    return FiniteGroup(std::move(table), "(" + n.name() + ") : (" + h.name() + ")", std::move(spec));
  }

  FiniteGroup heisenberg_inverting_extension(std::size_t p, std::size_t cap) {
    auto const n   = extraspecial(p);
    auto const h   = cyclic(2);
    auto const& ng = n.generators();
    auto       g   = semidirect_product(n, h, {{n.inv(ng[0]), ng[1]}}, cap);
    GroupSpec  spec;
    spec.kind     = GroupKind::semidirect_product;
    spec.params   = {static_cast<std::int64_t>(p)};
    spec.children = {n.spec(), h.spec()};
    return FiniteGroup(ElementTable(g.table()), "heisext(" + std::to_string(p) + ")", spec);
  }

  // ---------------------------------------------------------------------------
  // Fixtures
  // ---------------------------------------------------------------------------

  namespace {
    std::string trim(std::string s) {
      auto const not_space = [](unsigned char c) { return !std::isspace(c); };
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
      s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
      return s;
    }

    std::vector<std::vector<std::uint32_t>> parse_cycles(std::string const& text,
                                                         std::size_t        degree,
                                                         std::size_t        line) {
      std::string s;
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          s += c;
        }
      }
      std::vector<std::vector<std::uint32_t>> cycles;
      std::size_t                             i = 0;
      if (s.empty()) {
        throw ParseError("empty permutation", line);
      }
      while (i < s.size()) {
        if (s[i] != '(') {
          throw ParseError(std::string("expected '(' but found '") + s[i] + "'", line);
        }
        ++i;
        std::vector<std::uint32_t> cyc;
        if (i < s.size() && s[i] == ')') {
          ++i;
          continue;
        }
        while (true) {
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("expected a point number", line);
          }
          std::uint64_t v = 0;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > degree) {
              break;
            }
            ++i;
          }
          if (v == 0 || v > degree) {
            throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree),
                             line);
          }
          cyc.push_back(static_cast<std::uint32_t>(v - 1));
          if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
          }
          if (i < s.size() && s[i] == ')') {
            ++i;
            break;
          }
          throw ParseError("expected ',' or ')'", line);
        }
        cycles.push_back(std::move(cyc));
      }
      return cycles;
    }
  }  // namespace

  FiniteGroup parse_fixture(std::istream& in, std::string const& origin, std::size_t cap) {
    std::string              name;
    std::size_t              degree = 0;
    bool                     have_degree = false;
    std::vector<Permutation> gens;
    std::string              raw;
    std::size_t              line = 0;
    while (std::getline(in, raw)) {
      ++line;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      auto text = trim(raw);
      if (text.empty()) {
        continue;
      }
      if (name.empty()) {
        if (text.rfind("name", 0) != 0 || text.size() < 5
            || !std::isspace(static_cast<unsigned char>(text[4]))) {
          throw ParseError("expected 'name <label>'", line);
        }
        name = trim(text.substr(4));
        if (name.empty()) {
          throw ParseError("empty group name", line);
        }
        continue;
      }
      if (!have_degree) {
        std::istringstream ss(text);
        std::string        kw;
        long long          d = 0;
        std::string        rest;
        if (!(ss >> kw) || kw != "degree" || !(ss >> d) || (ss >> rest) || d < 1) {
          throw ParseError("expected 'degree <n>' with n >= 1", line);
        }
        degree      = static_cast<std::size_t>(d);
        have_degree = true;
        continue;
      }
      auto cycles = parse_cycles(text, degree, line);
      try {
        gens.push_back(Permutation::from_cycles(degree, cycles));
      } catch (InvalidPermutation const& e) {
        throw ParseError(e.what(), line);
      }
    }
    if (name.empty()) {
      throw ParseError("missing 'name' line", line + 1);
    }
    if (!have_degree) {
      throw ParseError("missing 'degree' line", line + 1);
    }
    GroupSpec spec;
    spec.kind         = GroupKind::fixture;
    spec.fixture_path = origin;
    auto table        = close(gens, degree, cap);
    return FiniteGroup(std::move(table), name, std::move(spec));
  }

  FiniteGroup load_fixture(std::filesystem::path const& path, std::size_t cap) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open fixture " + path.string());
    }
    return parse_fixture(in, path.string(), cap);
  }

  void write_fixture(std::ostream&                   out,
                     std::string const&              name,
                     std::size_t                     degree,
                     std::vector<Permutation> const& generators,
                     std::vector<std::string> const& comments) {
    for (auto const& c : comments) {
      out << "# " << c << '\n';
    }
    out << "name " << name << '\n' << "degree " << degree << '\n';
    for (auto const& g : generators) {
      out << g.to_cycle_string() << '\n';
    }
  }

  // ---------------------------------------------------------------------------
  // Builtin expressions
  // ---------------------------------------------------------------------------

  namespace {

    class BuiltinParser {
     public:
      explicit BuiltinParser(std::string_view text) : s_(text) {}

      GroupSpec parse() {
        auto spec = product();
        skip_space();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return spec;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw ParameterError("bad group expression '" + std::string(s_) + "': " + why);
      }

      void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool at_separator() {
        skip_space();
        if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '*')) {
          ++pos_;
          return true;
        }
        if (s_.substr(pos_, 2) == "\xC3\x97") {  // U+00D7
          pos_ += 2;
          return true;
        }
        return false;
      }

      GroupSpec product() {
        std::vector<GroupSpec> factors{factor()};
        while (at_separator()) {
          factors.push_back(factor());
        }
        if (factors.size() == 1) {
          return factors.front();
        }
        GroupSpec spec;
        spec.kind     = GroupKind::direct_product;
        spec.children = std::move(factors);
        return spec;
      }

      std::int64_t number() {
        skip_space();
        std::size_t const start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a number");
        }
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
      }

      std::vector<std::int64_t> arguments() {
        std::vector<std::int64_t> args;
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != '(') {
          return args;
        }
        ++pos_;
        args.push_back(number());
        skip_space();
        while (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          args.push_back(number());
          skip_space();
        }
        if (pos_ >= s_.size() || s_[pos_] != ')') {
          fail("expected ')'");
        }
        ++pos_;
        return args;
      }

      GroupSpec factor() {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '(') {
          ++pos_;
          auto inner = product();
          skip_space();
          if (pos_ >= s_.size() || s_[pos_] != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return inner;
        }
        std::size_t const start = pos_;
        while (pos_ < s_.size()
               && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
          ++pos_;
        }
        // The one long name that ends in a digit.
        if (s_.substr(start, pos_ - start) == "quaternion" && pos_ < s_.size() && s_[pos_] == '8') {
          ++pos_;
        }
        std::string word(s_.substr(start, pos_ - start));
        if (word.empty()) {
          fail("expected a group name");
        }
        std::string lower = word;
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
          return static_cast<char>(std::tolower(c));
        });

        // Short forms carry their number directly: C12, S3, D8, Q8, E27, F21.
        if (word.size() == 1 && pos_ < s_.size()
            && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          return short_form(lower[0], number());
        }
        auto args = arguments();
        auto need = [&](std::size_t k) {
          if (args.size() != k) {
            fail(word + " takes " + std::to_string(k) + " argument(s)");
          }
        };
        if (lower == "cyclic") {
          need(1);
          return leaf(GroupKind::cyclic, args);
        }
        if (lower == "sym" || lower == "symmetric") {
          need(1);
          return leaf(GroupKind::symmetric, args);
        }
        if (lower == "alt" || lower == "alternating") {
          need(1);
          return leaf(GroupKind::alternating, args);
        }
        if (lower == "dihedral") {
          need(1);
          return leaf(GroupKind::dihedral, args);
        }
        if (lower == "quaternion" || lower == "quaternion8") {
          need(0);
          return leaf(GroupKind::quaternion8);
        }
        if (lower == "extraspecial") {
          need(1);
          return leaf(GroupKind::extraspecial_p3, args);
        }
        if (lower == "frobenius") {
          need(2);
          return leaf(GroupKind::frobenius_pq, args);
        }
        if (lower == "heisext") {
          need(1);
          GroupSpec spec;
          spec.kind     = GroupKind::semidirect_product;
          spec.params   = args;
          spec.children = {leaf(GroupKind::extraspecial_p3, args), leaf(GroupKind::cyclic, {2})};
          return spec;
        }
        fail("unknown group name '" + word + "'");
      }

      GroupSpec short_form(char c, std::int64_t v) {
        switch (c) {
          case 'c':
            return leaf(GroupKind::cyclic, {v});
          case 's':
            return leaf(GroupKind::symmetric, {v});
          case 'a':
            return leaf(GroupKind::alternating, {v});
          case 'd':
            if (v < 2 || v % 2 != 0) {
              fail("D<n> needs an even order");
            }
            return leaf(GroupKind::dihedral, {v / 2});
          case 'q':
            if (v != 8) {
              fail("only Q8 is supported");
            }
            return leaf(GroupKind::quaternion8);
          case 'e': {
            for (std::int64_t p = 3; p * p * p <= v; ++p) {
              if (p * p * p == v) {
                return leaf(GroupKind::extraspecial_p3, {p});
              }
            }
            fail("E<n> needs n = p^3");
          }
          case 'f': {
            auto const prof = arithmetic_profile(static_cast<std::uint64_t>(v));
            if (prof.prime_factors.size() != 2 || prof.is_composite == false
                || prof.prime_factors.begin()->second != 1
                || prof.prime_factors.rbegin()->second != 1) {
              fail("F<n> needs n = pq for distinct primes");
            }
            auto const q = static_cast<std::int64_t>(prof.prime_factors.begin()->first);
            auto const p = static_cast<std::int64_t>(prof.prime_factors.rbegin()->first);
            return leaf(GroupKind::frobenius_pq, {p, q});
          }
          default:
            fail(std::string("unknown short form '") + static_cast<char>(std::toupper(c)) + "'");
        }
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  GroupSpec parse_builtin(std::string_view text) {
    return BuiltinParser(text).parse();
  }

  FiniteGroup build(GroupSpec const& spec, std::size_t cap) {
    switch (spec.kind) {
      case GroupKind::direct_product: {
        if (spec.children.empty()) {
          throw ParameterError("empty direct product");
        }
        FiniteGroup acc = build(spec.children.front(), cap);
        for (std::size_t i = 1; i < spec.children.size(); ++i) {
          acc = direct_product(acc, build(spec.children[i], cap), cap);
        }
        return acc;
      }
      case GroupKind::semidirect_product:
        if (spec.params.size() == 1) {
          return heisenberg_inverting_extension(checked_size(spec.params[0], "p"), cap);
        }
        throw ParameterError("semidirect products need an explicit action");
      case GroupKind::fixture:
        if (!spec.fixture_path) {
          throw ParameterError("fixture spec without a path");
        }
        return load_fixture(*spec.fixture_path, cap);
      case GroupKind::subgroup:
      case GroupKind::quotient:
        throw ParameterError("derived groups cannot be rebuilt from their spec");
      default:
        return make_named(spec, cap);
    }
  }

}  // namespace csg
