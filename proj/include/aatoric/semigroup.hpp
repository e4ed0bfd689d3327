/**
 * @file semigroup.hpp
 * @brief Numerical-semigroup arithmetic for almost arithmetic sequences:
 *        membership, the Apery set, the g_t decomposition, and the defining
 *        parameters u, v, w, z, lambda, mu, nu with their identities.
 *
 * Throughout, the input is m0 < m1 < ... < mp (an arithmetic sequence) plus
 * an arbitrary positive mn, with gcd 1 and no generator redundant.  Gamma is
 * the semigroup generated by all of them, Gamma' by the arithmetic part only.
 */
#pragma once

#include <numeric>
#include <vector>

#include "aatoric/common.hpp"

namespace aatoric {

namespace detail {

/// Lazily grown boolean table of semigroup membership for one generator set.
class membership_table {
 public:
  explicit membership_table(std::vector<Int> gens) : gens_(std::move(gens)) {
    reach_.push_back(true);  // 0 is the empty combination
  }

  bool contains(Int value) {
    if (value < 0) return false;
    grow(value);
    return reach_[static_cast<std::size_t>(value)];
  }

 private:
  void grow(Int bound) {
    std::size_t need = static_cast<std::size_t>(bound) + 1;
    if (reach_.size() >= need) return;
    std::size_t old = reach_.size();
    reach_.resize(need, false);
    // Forward DP only reads smaller indices, so growth is incremental.
    for (std::size_t x = old; x < need; ++x) {
      for (Int g : gens_) {
        if (static_cast<Int>(x) >= g && reach_[x - static_cast<std::size_t>(g)]) {
          reach_[x] = true;
          break;
        }
      }
    }
  }

  std::vector<Int> gens_;
  std::vector<char> reach_;
};

}  // namespace detail

/// Exact membership of gamma in the semigroup generated by gens.
inline bool is_member(Int gamma, const std::vector<Int>& gens) {
  if (gens.empty()) throw error("is_member: empty generator set");
  for (Int g : gens)
    if (g <= 0) throw error("is_member: generators must be positive");
  detail::membership_table table(gens);
  return table.contains(gamma);
}

/// The validated input sequence m0..mn with n >= 2 and p = n-1.
class validated_sequence {
 public:
  /// Checks length, positivity, the strictly increasing arithmetic head,
  /// gcd 1, and minimal generation.  Throws validation_error otherwise.
  static validated_sequence validate(std::vector<Int> m) {
    if (m.size() < 3)
      throw validation_error(validation_error::kind::too_short,
                             "need at least 3 generators (n >= 2)");
    for (Int v : m)
      if (v <= 0)
        throw validation_error(validation_error::kind::not_positive,
                               "generators must be positive");
    std::size_t p = m.size() - 2;
    if (m[1] <= m[0])
      throw validation_error(validation_error::kind::not_arithmetic,
                             "m0..mp must be strictly increasing");
    Int diff = m[1] - m[0];
    for (std::size_t i = 1; i < p; ++i) {
      if (m[i + 1] - m[i] != diff)
        throw validation_error(validation_error::kind::not_arithmetic,
                               "m0..mp is not an arithmetic sequence");
    }
    Int g = 0;
    for (Int v : m) g = std::gcd(g, v);
    if (g != 1)
      throw validation_error(validation_error::kind::gcd_not_one,
                             "gcd(m0..mn) = " + std::to_string(g));
    // Minimal generation: no generator in the semigroup of the others.
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::vector<Int> others;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i) others.push_back(m[j]);
      if (is_member(m[i], others))
        throw validation_error(
            validation_error::kind::not_minimally_generated,
            "generator m" + std::to_string(i) + " = " + std::to_string(m[i]) +
                " is redundant");
    }
    return validated_sequence(std::move(m));
  }

  const std::vector<Int>& generators() const { return m_; }
  std::size_t n() const { return m_.size() - 1; }
  std::size_t p() const { return m_.size() - 2; }
  Int m(std::size_t i) const { return m_.at(i); }
  Int m0() const { return m_.front(); }
  Int mp() const { return m_[p()]; }
  Int mn() const { return m_.back(); }

  /// Generators of Gamma' (the arithmetic part m0..mp).
  std::vector<Int> arithmetic_part() const {
    return std::vector<Int>(m_.begin(), m_.end() - 1);
  }

  friend bool operator==(const validated_sequence& a,
                         const validated_sequence& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit validated_sequence(std::vector<Int> m) : m_(std::move(m)) {}
  std::vector<Int> m_;
};

/// t = q_t*p + r_t with r_t in [1,p], and g_t = q_t*mp + m_{r_t}.
/// For t = 0 this forces q_0 = -1, r_0 = p and g_0 = 0 (the empty factor).
struct index_decomposition {
  Int q = 0;
  Int r = 0;
  Int g = 0;
};

inline index_decomposition decompose_index(Int t, const validated_sequence& seq) {
  if (t < 0) throw error("decompose_index: t must be nonnegative");
  Int p = static_cast<Int>(seq.p());
  if (t == 0) return {-1, p, 0};
  Int q = (t - 1) / p;
  Int r = t - q * p;
  Int g = checked_add(checked_mul(q, seq.mp()), seq.m(static_cast<std::size_t>(r)));
  return {q, r, g};
}

/// Closed interval [lo,hi] of integers; lo > hi means empty.
struct interval {
  Int lo = 0;
  Int hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(Int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const interval& a, const interval& b) {
    return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
  }
};

/// The full parameter record:
///   u = min{t >= 0 | g_t - m0 in Gamma},   v = min{b >= 1 | b*mn in Gamma'},
///   g_u = lambda*m0 + w*mn               (lambda >= 1, w in [0,v-1]),
///   v*mn = mu*m0 + g_z                   (mu >= 0, z in [0,u-1]),
///   g_{u-z} + (v-w)*mn = nu*m0           (nu >= 2),
/// plus the index splits of u, u-z and z, and the Patil intervals I, J.
///
/// When z = 0 the split of z takes the g_0 convention q_z = -1, r_z = p,
/// epsilon = 1, under which q' = q - q_z - epsilon and
/// r' = epsilon*p + r - r_z still hold.
struct semigroup_params {
  Int p = 0;

  Int u = 0;
  Int upsilon = 0;
  Int w = 0;
  Int z = 0;
  Int lambda = 0;
  Int mu = 0;
  Int nu = 0;

  Int q = 0;
  Int r = 0;
  Int q_prime = 0;
  Int r_prime = 0;
  Int q_z = 0;
  Int r_z = 0;
  Int epsilon = 0;

  bool w_nonempty = false;  // W != empty, i.e. z >= 1 and w >= 1
  interval I;
  interval J;

  /// V = [0,u-1] x [0,v-1].
  bool in_V(Int s, Int b) const {
    return 0 <= s && s <= u - 1 && 0 <= b && b <= upsilon - 1;
  }
  /// W = [u-z,u-1] x [v-w,v-1].
  bool in_W(Int s, Int b) const {
    return u - z <= s && s <= u - 1 && upsilon - w <= b && b <= upsilon - 1;
  }
};

namespace detail {

constexpr Int kScanCap = 1000000;

inline void require(bool ok, const char* what) {
  if (!ok) throw internal_inconsistency(what);
}

}  // namespace detail

/// Extracts every parameter and re-verifies the defining identities;
/// any failure aborts with internal_inconsistency.
inline semigroup_params compute_params(const validated_sequence& seq) {
  semigroup_params out;
  const Int p = static_cast<Int>(seq.p());
  out.p = p;

  detail::membership_table gamma(seq.generators());
  detail::membership_table gamma_prime(seq.arithmetic_part());

  // u = min{t >= 0 | g_t - m0 in Gamma}; g_0 = 0 never qualifies.
  Int u = -1;
  for (Int t = 1; t <= detail::kScanCap; ++t) {
    if (gamma.contains(decompose_index(t, seq).g - seq.m0())) {
      u = t;
      break;
    }
  }
  detail::require(u > 0, "u scan exhausted");
  detail::require(u > p, "u <= p contradicts minimal generation");

  // v = min{b >= 1 | b*mn in Gamma'}; bounded by m0 since m0*mn in Gamma'.
  Int upsilon = -1;
  for (Int b = 1; b <= seq.m0(); ++b) {
    if (gamma_prime.contains(checked_mul(b, seq.mn()))) {
      upsilon = b;
      break;
    }
  }
  detail::require(upsilon >= 1, "v scan exhausted");

  out.u = u;
  out.upsilon = upsilon;

  const auto du = decompose_index(u, seq);
  out.q = du.q;
  out.r = du.r;
  detail::require(out.q >= 1, "q >= 1 fails");

  // (i) g_u = lambda*m0 + w*mn, unique with lambda >= 1, w in [0,v-1].
  int hits = 0;
  for (Int w = 0; w < upsilon; ++w) {
    Int rest = du.g - checked_mul(w, seq.mn());
    if (rest >= seq.m0() && rest % seq.m0() == 0) {
      out.w = w;
      out.lambda = rest / seq.m0();
      ++hits;
    }
  }
  detail::require(hits == 1, "identity (i) has no unique (lambda, w)");

  // (ii) v*mn = mu*m0 + g_z, unique with mu >= 0, z in [0,u-1].
  hits = 0;
  const Int vmn = checked_mul(upsilon, seq.mn());
  for (Int z = 0; z < u; ++z) {
    Int rest = vmn - decompose_index(z, seq).g;
    if (rest >= 0 && rest % seq.m0() == 0) {
      out.z = z;
      out.mu = rest / seq.m0();
      ++hits;
    }
  }
  detail::require(hits == 1, "identity (ii) has no unique (mu, z)");

  const auto dz = decompose_index(out.z, seq);
  out.q_z = dz.q;
  out.r_z = dz.r;
  out.epsilon = (out.r <= out.r_z) ? 1 : 0;

  const auto duz = decompose_index(u - out.z, seq);
  out.q_prime = duz.q;
  out.r_prime = duz.r;
  detail::require(out.q_prime == out.q - out.q_z - out.epsilon,
                  "q' = q - q_z - epsilon fails");
  detail::require(out.r_prime == out.epsilon * p + out.r - out.r_z,
                  "r' = epsilon*p + r - r_z fails");

  // (iii) g_{u-z} + (v-w)*mn = nu*m0 with the lambda/mu relation.
  Int lhs = checked_add(duz.g, checked_mul(upsilon - out.w, seq.mn()));
  detail::require(lhs % seq.m0() == 0, "identity (iii) not divisible by m0");
  out.nu = lhs / seq.m0();
  detail::require(out.nu >= 2, "nu >= 2 fails");
  Int expected_nu =
      (out.r_prime < out.r) ? out.lambda + out.mu + 1 : out.lambda + out.mu;
  detail::require(out.nu == expected_nu, "nu relation to lambda + mu fails");

  out.w_nonempty = (out.z >= 1 && out.w >= 1);

  if (out.mu != 0 || !out.w_nonempty) {
    out.I = {0, p - out.r};
  } else {
    out.I = {std::max(out.r_z - out.r + 1, Int{0}), p - out.r};
  }
  if (!out.w_nonempty) {
    out.J = {0, -1};
  } else {
    out.J = {0, std::min(out.z - 1, p - out.r_prime)};
  }

  return out;
}

/// The Apery set S = {gamma in Gamma | gamma - m0 not in Gamma}: the least
/// semigroup element in each residue class mod m0.  Returned sorted.
inline std::vector<Int> apery_set(const validated_sequence& seq) {
  const Int m0 = seq.m0();
  detail::membership_table gamma(seq.generators());
  std::vector<Int> least(static_cast<std::size_t>(m0), -1);
  Int found = 0;
  for (Int value = 0; found < m0; ++value) {
    if (value > detail::kScanCap)
      throw internal_inconsistency("apery scan exhausted");
    Int residue = value % m0;
    if (least[static_cast<std::size_t>(residue)] >= 0) continue;
    if (gamma.contains(value)) {
      least[static_cast<std::size_t>(residue)] = value;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

/// The unique triple of Lemma (b): gamma = a*m0 + g_s + b*mn with a >= 0 and
/// (s,b) in V minus W.  Exhaustive search; exactly one solution must exist.
struct representation {
  Int a = 0;
  Int s = 0;
  Int b = 0;
};

inline representation unique_representation(Int gamma,
                                            const semigroup_params& params,
                                            const validated_sequence& seq) {
  if (gamma < 0 || !is_member(gamma, seq.generators()))
    throw not_a_member("gamma is not in the semigroup");
  representation found;
  int hits = 0;
  for (Int s = 0; s < params.u; ++s) {
    Int gs = decompose_index(s, seq).g;
    for (Int b = 0; b < params.upsilon; ++b) {
      if (params.in_W(s, b)) continue;
      Int rest = gamma - gs - checked_mul(b, seq.mn());
      if (rest >= 0 && rest % seq.m0() == 0) {
        found = {rest / seq.m0(), s, b};
        ++hits;
      }
    }
  }
  if (hits == 0)
    throw internal_inconsistency("member without V-W representation");
  if (hits > 1)
    throw non_unique_representation("representation is not unique");
  return found;
}

}  // namespace aatoric
