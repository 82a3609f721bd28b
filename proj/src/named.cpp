#include "landau/named.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "landau/error.hpp"
#include "landau/numtheory.hpp"

namespace landau {

namespace {

[[noreturn]] void unsupported(const std::string& why) { throw Error(ErrorKind::unsupported_spec, why); }

FiniteGroup from_images(std::size_t degree, const std::vector<std::vector<Point>>& image_lists) {
  std::vector<Permutation> gens;
  for (const auto& images : image_lists) gens.push_back(Permutation::from_images(images));
  return closure(gens, degree);
}

FiniteGroup from_cycles(std::size_t degree, const std::vector<std::vector<Cycle>>& cycle_lists) {
  std::vector<Permutation> gens;
  for (const auto& cs : cycle_lists) gens.push_back(Permutation::from_cycles(degree, cs));
  return closure(gens, degree);
}

Cycle full_cycle(Point from, Point to) {
  Cycle c;
  for (Point p = from; p <= to; ++p) c.push_back(p);
  return c;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1u) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1u;
  }
  return r;
}

FiniteGroup cyclic(std::uint64_t m) {
  if (m < 1) unsupported("cyclic(m) needs m >= 1");
  if (m == 1) return closure({}, 1);
  return from_cycles(m, {{full_cycle(1, static_cast<Point>(m))}});
}

FiniteGroup dihedral(std::uint64_t order) {
  if (order < 2 || order % 2) unsupported("dihedral(2m) needs an even order >= 2");
  const std::uint64_t m = order / 2;
  if (m == 1) return cyclic(2);
  if (m == 2) return from_cycles(4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  std::vector<Point> reflection(m);
  for (std::uint64_t i = 0; i < m; ++i) reflection[i] = static_cast<Point>((m - i) % m + 1);
  std::vector<Point> rotation(m);
  for (std::uint64_t i = 0; i < m; ++i) rotation[i] = static_cast<Point>((i + 1) % m + 1);
  return from_images(m, {rotation, reflection});
}

FiniteGroup symmetric(std::uint64_t m) {
  if (m < 1 || m > 6) unsupported("symmetric(m) needs 1 <= m <= 6");
  if (m == 1) return closure({}, 1);
  if (m == 2) return from_cycles(2, {{{1, 2}}});
  return from_cycles(m, {{full_cycle(1, static_cast<Point>(m))}, {{1, 2}}});
}

FiniteGroup alternating(std::uint64_t m) {
  if (m < 1 || m > 6) unsupported("alternating(m) needs 1 <= m <= 6");
  if (m < 3) return closure({}, m);
  std::vector<std::vector<Cycle>> gens;
  for (Point i = 3; i <= m; ++i) gens.push_back({{1, 2, i}});
  return from_cycles(m, gens);
}

FiniteGroup semidirect_cyclic(std::uint64_t p, std::uint64_t q, std::uint64_t e) {
  if (p < 1 || q < 1) unsupported("semidirect_cyclic(p, q, e) needs p, q >= 1");
  if (p * q > kDefaultOrderCap) unsupported("semidirect_cyclic order exceeds the order cap");
  if (std::gcd(e, p) != 1 || power_mod(e, q, p) != 1 % p)
    unsupported("semidirect_cyclic needs gcd(e, p) = 1 and e^q = 1 mod p");
  // Right-regular representation on the normal forms a^i b^j, using
  // b^j a = a^(e^j) b^j.
  const auto point = [q](std::uint64_t i, std::uint64_t j) { return static_cast<Point>(i * q + j + 1); };
  std::vector<Point> by_a(p * q), by_b(p * q);
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t j = 0; j < q; ++j) {
      by_a[point(i, j) - 1] = point((i + power_mod(e, j, p)) % p, j);
      by_b[point(i, j) - 1] = point(i, (j + 1) % q);
    }
  return from_images(p * q, {by_a, by_b});
}

FiniteGroup sl23() {
  // Right action v -> vM on the eight non-zero vectors of F_3^2.
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  const auto act = [&](int a, int b, int c, int d) {
    std::vector<Point> images;
    for (auto [x, y] : vecs) {
      const std::pair<int, int> w{(x * a + y * c) % 3, (x * b + y * d) % 3};
      for (std::size_t k = 0; k < vecs.size(); ++k)
        if (vecs[k] == w) images.push_back(static_cast<Point>(k + 1));
    }
    return images;
  };
  return from_images(8, {act(1, 1, 0, 1), act(0, 1, 2, 0)});
}

FiniteGroup holomorph_elementary(std::uint64_t p, std::uint64_t s) {
  if (!is_prime(p) || s < 1) unsupported("holomorph_elementary(p, s) needs p prime and s >= 1");
  std::uint64_t points = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    points *= p;
    if (points > 256) unsupported("holomorph_elementary supports p^s <= 256");
  }
  // Points are vectors of F_p^s encoded in base p; maps are v -> vM + t.
  const auto decode = [&](std::uint64_t v) {
    std::vector<std::uint64_t> c(s);
    for (std::uint64_t i = 0; i < s; ++i, v /= p) c[i] = v % p;
    return c;
  };
  const auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t v = 0;
    for (std::uint64_t i = s; i-- > 0;) v = v * p + c[i];
    return v;
  };
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  const auto affine = [&](const Matrix& m, const std::vector<std::uint64_t>& t) {
    std::vector<Point> images(points);
    for (std::uint64_t v = 0; v < points; ++v) {
      const auto x = decode(v);
      std::vector<std::uint64_t> y(s, 0);
      for (std::uint64_t j = 0; j < s; ++j) {
        std::uint64_t acc = t[j];
        for (std::uint64_t i = 0; i < s; ++i) acc += x[i] * m[i][j];
        y[j] = acc % p;
      }
      images[v] = static_cast<Point>(encode(y) + 1);
    }
    return images;
  };
  const auto identity = [&] {
    Matrix m(s, std::vector<std::uint64_t>(s, 0));
    for (std::uint64_t i = 0; i < s; ++i) m[i][i] = 1;
    return m;
  };
  std::uint64_t primitive = 1;
  for (std::uint64_t w = 1; w < p; ++w) {
    bool generates = true;
    for (std::uint64_t k = 1; k < p - 1; ++k)
      if (power_mod(w, k, p) == 1) generates = false;
    if (generates) {
      primitive = w;
      break;
    }
  }
  std::vector<std::vector<Point>> gens;
  const std::vector<std::uint64_t> zero(s, 0);
  for (std::uint64_t i = 0; i < s; ++i) {
    std::vector<std::uint64_t> t(s, 0);
    t[i] = 1;
    gens.push_back(affine(identity(), t));
  }
  Matrix scale = identity();
  scale[0][0] = primitive;
  gens.push_back(affine(scale, zero));
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j) {
      if (i == j) continue;
      Matrix tv = identity();
      tv[i][j] = 1;
      gens.push_back(affine(tv, zero));
    }
  return from_images(points, gens);
}

// Recursive-descent parser for group descriptions.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  NamedGroupSpec parse() {
    NamedGroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    unsupported("cannot parse group spec '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<std::uint64_t> numbers(std::size_t count) {
    std::vector<std::uint64_t> out;
    if (!consume('(')) fail("expected '('");
    for (std::size_t i = 0; i < count; ++i) {
      if (i && !consume(',')) fail("expected ','");
      out.push_back(number());
    }
    if (!consume(')')) fail("expected ')'");
    return out;
  }

  NamedGroupSpec parse_spec() {
    const std::string name = identifier();
    using K = NamedGroupSpec::Kind;
    if (name == "cyclic") return {K::cyclic, numbers(1), {}};
    if (name == "dihedral") return {K::dihedral, numbers(1), {}};
    if (name == "symmetric") return {K::symmetric, numbers(1), {}};
    if (name == "alternating") return {K::alternating, numbers(1), {}};
    if (name == "semidirect_cyclic") return {K::semidirect_cyclic, numbers(3), {}};
    if (name == "holomorph_elementary") return {K::holomorph_elementary, numbers(2), {}};
    if (name == "quaternion") {
      std::vector<std::uint64_t> params{8};
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') params = numbers(1);
      return {K::quaternion, params, {}};
    }
    if (name == "sl23") {
      if (consume('(') && !consume(')')) fail("sl23 takes no parameters");
      return NamedGroupSpec::sl23();
    }
    if (name == "direct_product") {
      if (!consume('(')) fail("expected '('");
      NamedGroupSpec a = parse_spec();
      if (!consume(',')) fail("expected ','");
      NamedGroupSpec b = parse_spec();
      if (!consume(')')) fail("expected ')'");
      return NamedGroupSpec::direct_product(std::move(a), std::move(b));
    }
    fail("unknown group name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_params(const std::vector<std::uint64_t>& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s;
}

}  // namespace

FiniteGroup construct_named(const NamedGroupSpec& spec) {
  using K = NamedGroupSpec::Kind;
  const auto need = [&](std::size_t n) {
    if (spec.params.size() != n) unsupported("wrong number of parameters for " + to_string(spec));
  };
  FiniteGroup g;
  switch (spec.kind) {
    case K::cyclic: need(1); g = cyclic(spec.params[0]); break;
    case K::dihedral: need(1); g = dihedral(spec.params[0]); break;
    case K::symmetric: need(1); g = symmetric(spec.params[0]); break;
    case K::alternating: need(1); g = alternating(spec.params[0]); break;
    case K::quaternion:
      need(1);
      if (spec.params[0] != 8) unsupported("only quaternion(8) is supported");
      g = from_cycles(8, {{{1, 3, 2, 4}, {5, 7, 6, 8}}, {{1, 5, 2, 6}, {3, 8, 4, 7}}});
      break;
    case K::semidirect_cyclic:
      need(3);
      g = semidirect_cyclic(spec.params[0], spec.params[1], spec.params[2]);
      break;
    case K::sl23: need(0); g = sl23(); break;
    case K::holomorph_elementary: need(2); g = holomorph_elementary(spec.params[0], spec.params[1]); break;
    case K::direct_product: {
      if (spec.factors.size() != 2) unsupported("direct_product takes two factors");
      const FiniteGroup a = construct_named(spec.factors[0]);
      const FiniteGroup b = construct_named(spec.factors[1]);
      const std::size_t degree = a.degree() + b.degree();
      if (a.order() * b.order() > kDefaultOrderCap) unsupported("direct product exceeds the order cap");
      std::vector<Permutation> gens;
      for (const Permutation& x : a.generators()) {
        std::vector<Point> images;
        for (Point i = 1; i <= degree; ++i) images.push_back(i <= a.degree() ? x(i) : i);
        gens.push_back(Permutation::from_images(images));
      }
      for (const Permutation& y : b.generators()) {
        std::vector<Point> images;
        for (Point i = 1; i <= degree; ++i)
          images.push_back(i <= a.degree() ? i : static_cast<Point>(y(i - a.degree()) + a.degree()));
        gens.push_back(Permutation::from_images(images));
      }
      g = closure(gens, degree);
      break;
    }
  }
  return g.with_label(display_label(spec));
}

NamedGroupSpec parse_named_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const NamedGroupSpec& spec) {
  using K = NamedGroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return "cyclic(" + join_params(spec.params) + ")";
    case K::dihedral: return "dihedral(" + join_params(spec.params) + ")";
    case K::quaternion: return "quaternion(" + join_params(spec.params) + ")";
    case K::symmetric: return "symmetric(" + join_params(spec.params) + ")";
    case K::alternating: return "alternating(" + join_params(spec.params) + ")";
    case K::semidirect_cyclic: return "semidirect_cyclic(" + join_params(spec.params) + ")";
    case K::holomorph_elementary: return "holomorph_elementary(" + join_params(spec.params) + ")";
    case K::sl23: return "sl23";
    case K::direct_product:
      if (spec.factors.size() != 2) return "direct_product(?)";
      return "direct_product(" + to_string(spec.factors[0]) + "," + to_string(spec.factors[1]) + ")";
  }
  return "?";
}

std::string display_label(const NamedGroupSpec& spec) {
  using K = NamedGroupSpec::Kind;
  const auto p = [&](std::size_t i) { return i < spec.params.size() ? std::to_string(spec.params[i]) : "?"; };
  switch (spec.kind) {
    case K::cyclic: return spec.params.size() == 1 && spec.params[0] == 1 ? "1" : "C" + p(0);
    case K::dihedral: return "D" + p(0);
    case K::quaternion: return "Q" + p(0);
    case K::symmetric: return "S" + p(0);
    case K::alternating: return "A" + p(0);
    case K::semidirect_cyclic: return "C" + p(0) + " : C" + p(1);
    case K::sl23: return "SL(2,3)";
    case K::holomorph_elementary: return "AGL(" + p(1) + "," + p(0) + ")";
    case K::direct_product: {
      if (spec.factors.size() != 2) return "?";
      const auto wrap = [](const NamedGroupSpec& f) {
        const std::string s = display_label(f);
        return f.kind == K::semidirect_cyclic ? "(" + s + ")" : s;
      };
      return wrap(spec.factors[0]) + " x " + wrap(spec.factors[1]);
    }
  }
  return "?";
}

}  // namespace landau
