#include "fmb/jennings.hpp"

#include <algorithm>

#include "fmb/error.hpp"

namespace fmb {

JenningsProfile jennings_profile(const Group& g, int p) {
  SubgroupChain chain = lazard_series(g, p);
  JenningsProfile prof;
  prof.p = p;
  for (size_t i = 0; i + 1 < chain.terms.size(); ++i) {
    const auto& mi = chain.terms[i];
    const auto& next = chain.terms[i + 1];
    if (mi.size() == next.size()) {
      prof.layers.emplace_back();
      prof.dims.push_back(0);
      continue;
    }
    std::vector<Elt> reps;
    std::vector<Elt> span(next);
    while (span.size() < mi.size()) {
      for (Elt x : mi) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        reps.push_back(x);
        std::vector<Elt> seeds(span);
        seeds.push_back(x);
        span = subgroup_generated(g, seeds);
        break;
      }
    }
    const int layer = static_cast<int>(i) + 1;
    for (Elt r : reps) {
      prof.reps.push_back(r);
      prof.weights.push_back(layer);
    }
    prof.layers.push_back(std::move(reps));
    prof.dims.push_back(static_cast<int>(prof.layers.back().size()));
    prof.weightsum += layer * prof.dims.back();
  }
  return prof;
}

std::vector<RegularMonomial> regular_basis(const JenningsProfile& prof, const Group& g,
                                           const Field& f, int t) {
  const int r = static_cast<int>(prof.reps.size());
  const int n = g.order();
  std::vector<Vec> factors(r);
  for (int i = 0; i < r; ++i) factors[i] = elem_minus_one(g, f, prof.reps[i]);

  std::vector<RegularMonomial> out;
  std::vector<int> exps(r, 0);
  // Depth-first over exponent vectors keeps partial products shared.
  std::vector<Vec> partial(r + 1);
  partial[0] = vec_one(n);
  auto rec = [&](auto&& self, int i, int weight) -> void {
    if (i == r) {
      if (weight >= t) out.push_back({exps, weight, partial[r]});
      return;
    }
    for (int e = 0; e < prof.p; ++e) {
      exps[i] = e;
      if (e == 0) {
        partial[i + 1] = partial[i];
      } else {
        partial[i + 1] = alg_mul(g, f, partial[i + 1], factors[i]);
      }
      self(self, i + 1, weight + e * prof.weights[i]);
    }
    exps[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

CrosscheckReport jennings_crosscheck(const Group& g, const Field& f, const Filtration& filt,
                                     const JenningsProfile& prof) {
  CrosscheckReport rep;
  auto all = regular_basis(prof, g, f, 0);
  for (int t = 0; t <= filt.s + 1; ++t) {
    Subspace span(f, g.order());
    for (const auto& m : all)
      if (m.weight >= t) span.insert(m.value);
    const int dim = (t == 0) ? g.order() : filt.dim_power(t);
    CrosscheckRow row{t, span.dim(), dim, span.dim() == dim};
    rep.pass = rep.pass && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

std::string CrosscheckReport::summary() const {
  std::string out;
  for (const auto& r : rows) {
    out += "t=" + std::to_string(r.t) + " rank=" + std::to_string(r.monomial_rank) +
           " dim=" + std::to_string(r.dim_power) + (r.ok ? " ok" : " MISMATCH") + "\n";
  }
  out += pass ? "crosscheck: pass\n" : "crosscheck: FAIL\n";
  return out;
}

}  // namespace fmb
