#include "mekr/bounds.hpp"

#include <stdexcept>

namespace mekr {
namespace {

void validate_mkt(int m, int k, int t) {
  if (m < 1) throw std::domain_error("ground size must be >= 1");
  if (k < 1) throw std::domain_error("cardinality must be >= 1");
  if (t < 1) throw std::domain_error("t must be >= 1");
  if (t > k)
    throw std::domain_error("t-intersection is impossible for t > k");
}

}  // namespace

BoundValue star_bound(int m, int k) {
  if (m < 1 || k < 1) throw std::domain_error("star_bound: need m >= 1, k >= 1");
  BoundValue out;
  out.value = binomial(m + k - 2, k - 1);
  out.hypothesis = "m >= k+1";
  out.hypothesis_ok = m >= k + 1;
  return out;
}

BoundValue t_intersecting_bound(int m, int k, int t) {
  validate_mkt(m, k, t);
  BoundValue out;
  out.value = binomial(m + k - t - 1, k - t);
  out.hypothesis = "m >= t(k-t)+2";
  out.hypothesis_ok = m >= t * (k - t) + 2;
  return out;
}

BoundValue cross_sum_bound(int m, int k, int t) {
  validate_mkt(m, k, t);
  BoundValue out;
  BigInt deficiency = 0;
  for (int i = 0; i < t; ++i)
    deficiency += binomial(k, i) * binomial(m - 1, k - i);
  out.value = multichoose(m, k) - deficiency + 1;
  if (t == 1) {
    out.hypothesis = "m >= k+1";
    out.hypothesis_ok = m >= k + 1;
  } else {
    out.hypothesis = "m >= 2k-t";
    out.hypothesis_ok = m >= 2 * k - t;
  }
  return out;
}

BoundValue set_cross_sum_bound(long long n, int k, int t) {
  if (n < 1) throw std::domain_error("set_cross_sum_bound: need n >= 1");
  if (k < 1 || t < 1)
    throw std::domain_error("set_cross_sum_bound: need k >= 1, t >= 1");
  BoundValue out;
  BigInt deficiency = 0;
  for (int i = 0; i < t; ++i)
    deficiency += binomial(k, i) * binomial(n - k, k - i);
  out.value = binomial(n, k) - deficiency + 1;
  out.hypothesis = "k > t, n > 2k-t, (n,t) != (2k,1)";
  out.hypothesis_ok = k > t && n > 2 * k - t && !(n == 2 * k && t == 1);
  return out;
}

Family star_family(const Universe& u, int element) {
  if (element < 1 || element > u.ground_size())
    throw std::invalid_argument("star_family: element out of range");
  Family out(u);
  for (std::uint64_t r = 0; r < u.size(); ++r)
    if (u.unrank(r).multiplicity(element) >= 1) out.insert_rank(r);
  return out;
}

std::pair<Family, Family> hilton_milner_pair(int m, int k, int t) {
  validate_mkt(m, k, t);
  if (k > m)
    throw std::domain_error("hilton_milner_pair: needs k <= m for a simple base");
  Universe u(m, k);
  const Multiset base = Multiset::from_elements(m, [&] {
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i + 1;
    return e;
  }());

  Family f(u);
  f.insert(base);
  Family g(u);
  for (std::uint64_t r = 0; r < u.size(); ++r)
    if (intersection_size(u.unrank(r), base) >= t) g.insert_rank(r);
  return {std::move(f), std::move(g)};
}

PredictedOptima predicted_optima(int m, int k, int t) {
  validate_mkt(m, k, t);
  PredictedOptima out;

  if (t >= 2) {
    if (m < 2 * k - t) {
      out.note = "outside classified range: m < 2k-t";
      return out;
    }
    out.applicable = true;
    out.classes.push_back(hilton_milner_pair(m, k, t));
    return out;
  }

  // t == 1
  if (m < k + 1) {
    out.note = "outside classified range: m < k+1";
    return out;
  }
  out.applicable = true;
  out.classes.push_back(hilton_milner_pair(m, k, t));
  if (k == 2) {
    Universe u(m, k);
    Family star = star_family(u, 1);
    out.classes.emplace_back(star, star);
    if (m == 3) {
      Family tri(u);
      tri.insert(Multiset::from_elements(3, {1, 2}));
      tri.insert(Multiset::from_elements(3, {1, 3}));
      tri.insert(Multiset::from_elements(3, {2, 3}));
      out.classes.emplace_back(tri, tri);
    }
  }
  return out;
}

}  // namespace mekr
