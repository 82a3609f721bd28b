#include "landau/fingerprint.hpp"

#include <algorithm>
#include <mutex>

#include "landau/error.hpp"
#include "landau/named.hpp"
#include "landau/numtheory.hpp"

namespace landau {

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  for (const ConjClassRecord& c : g.classes()) fp.class_sizes.push_back(c.size);
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  for (ElementIndex i = 0; i < g.order(); ++i) ++fp.order_histogram[g.element_order(i)];
  if (fp.abelian) {
    fp.abelian_invariants = abelian_invariants(g);
  } else {
    fp.derived_order = derived_subgroup(g).order();
  }
  return fp;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorKind::precondition_violated, "abelian_invariants needs an abelian group");
  std::map<std::size_t, std::size_t> histogram;
  for (ElementIndex i = 0; i < g.order(); ++i) ++histogram[g.element_order(i)];

  // For each prime p, the number of elements of order dividing p^j is
  // p^(sum_i min(e_i, j)); successive differences of the exponents count the
  // cyclic factors of order at least p^j.
  std::vector<std::vector<std::uint64_t>> primary;  // per prime, factor orders descending
  for (std::uint64_t p : prime_divisors(g.order())) {
    std::vector<unsigned> at_least;  // at_least[j-1]: factors of order >= p^j
    unsigned previous = 0;
    std::uint64_t pj = 1;
    for (;;) {
      pj *= p;
      std::size_t count = 0;
      for (const auto& [ord, n] : histogram)
        if (pj % ord == 0) count += n;
      unsigned e = 0;
      for (std::size_t c = count; c > 1; c /= p) ++e;
      if (e == previous) break;
      at_least.push_back(e - previous);
      previous = e;
    }
    std::vector<std::uint64_t> factors;
    std::uint64_t q = 1;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      q *= p;
      const unsigned exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      for (unsigned k = 0; k < exact; ++k) factors.push_back(q);
    }
    std::sort(factors.rbegin(), factors.rend());
    primary.push_back(std::move(factors));
  }
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0;; ++k) {
    std::uint64_t d = 1;
    bool any = false;
    for (const auto& f : primary)
      if (k < f.size()) {
        d *= f[k];
        any = true;
      }
    if (!any) break;
    out.push_back(d);
  }
  return out;
}

namespace {

struct KnownGroup {
  GroupFingerprint fp;
  std::string label;
};

const std::vector<KnownGroup>& known_nonabelian() {
  static const std::vector<KnownGroup> table = [] {
    using S = NamedGroupSpec;
    const std::vector<std::pair<NamedGroupSpec, std::string>> specs = {
        {S::symmetric(3), "S3"},
        {S::dihedral(8), "D8"},
        {S::quaternion(), "Q8"},
        {S::dihedral(10), "D10"},
        {S::alternating(4), "A4"},
        {S::dihedral(12), "D12"},
        {S::semidirect_cyclic(3, 4, 2), "C3 : C4"},
        {S::dihedral(14), "D14"},
        {S::dihedral(16), "D16"},
        {S::dihedral(18), "D18"},
        {S::direct_product(S::cyclic(3), S::symmetric(3)), "C3 x S3"},
        {S::semidirect_cyclic(5, 4, 2), "C5 : C4"},
        {S::semidirect_cyclic(7, 3, 2), "C7 : C3"},
        {S::sl23(), "SL(2,3)"},
        {S::symmetric(4), "S4"},
        {S::direct_product(S::cyclic(2), S::alternating(4)), "C2 x A4"},
        {S::dihedral(20), "D20"},
        {S::dihedral(30), "D30"},
        {S::alternating(5), "A5"},
        {S::symmetric(5), "S5"},
        {S::holomorph_elementary(2, 3), "AGL(3,2)"},
    };
    std::vector<KnownGroup> out;
    for (const auto& [spec, label] : specs) out.push_back({fingerprint(construct_named(spec)), label});
    return out;
  }();
  return table;
}

}  // namespace

std::string describe(const FiniteGroup& g) {
  if (g.order() == 1) return "1";
  const GroupFingerprint fp = fingerprint(g);
  if (fp.abelian) {
    std::string s;
    for (std::size_t i = 0; i < fp.abelian_invariants.size(); ++i) {
      if (i) s += " x ";
      s += "C" + std::to_string(fp.abelian_invariants[i]);
    }
    return s;
  }
  const KnownGroup* match = nullptr;
  for (const KnownGroup& k : known_nonabelian()) {
    if (!(k.fp == fp)) continue;
    if (match) return "[order " + std::to_string(fp.order) + ", " + std::to_string(fp.class_sizes.size()) + " classes]";
    match = &k;
  }
  if (match) return match->label;
  return "[order " + std::to_string(fp.order) + ", " + std::to_string(fp.class_sizes.size()) + " classes]";
}

}  // namespace landau
