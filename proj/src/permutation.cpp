#include "landau/permutation.hpp"

#include <numeric>

#include "landau/error.hpp"

namespace landau {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_permutation: return "invalid-permutation";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::not_a_member: return "not-a-member";
    case ErrorKind::not_a_subgroup: return "not-a-subgroup";
    case ErrorKind::not_normal: return "not-normal";
    case ErrorKind::not_in_subgroup: return "not-in-subgroup";
    case ErrorKind::unsupported_spec: return "unsupported-spec";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::out_of_range: return "n1-out-of-range";
    case ErrorKind::wrong_graph_shape: return "wrong-graph-shape";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::schema_mismatch: return "schema-mismatch";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::duplicate_id: return "duplicate-id";
    case ErrorKind::incomplete_catalog: return "incomplete-catalog";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  std::vector<std::uint32_t> zero_based(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = images[i];
    if (p < 1 || p > n || hit[p - 1])
      throw Error(ErrorKind::invalid_permutation,
                  "image list is not a bijection on {1.." + std::to_string(n) + "}");
    hit[p - 1] = true;
    zero_based[i] = p - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> seen(degree, false);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point p = c[i];
      if (p < 1 || p > degree || seen[p - 1])
        throw Error(ErrorKind::invalid_permutation,
                    "cycle point " + std::to_string(p) + " repeated or outside 1.." +
                        std::to_string(degree));
      seen[p - 1] = true;
      images[p - 1] = c[(i + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // (g^-1 x g)(i) in right-action terms: i -> g^-1 -> x -> g
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[g.images_[i]] = g.images_[images_[i]];
  return Permutation(std::move(out));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    Cycle c;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const Cycle& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.raw_images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace landau
