// Names for the knots handled by the library: the arrow-diagram ovals T_n,
// torus knots T(m,n), the three one-crossing families K/K'/K'', iterated
// torus (cable) types, and mirrors.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hopfknots {

// Parameter-range or structural-constraint violation (distinct from syntax
// errors so the CLI can report them with a dedicated exit code).
struct ConstraintError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One cabling stage: gcd(p,q)=1 and 1<p<q, except that a first stage (1,q)
// is tolerated (a cable of the trivial torus knot).
struct CableStage {
  long long p = 0;
  long long q = 0;
  bool operator==(const CableStage&) const = default;
};

struct CableType {
  std::vector<CableStage> stages;
  bool operator==(const CableType&) const = default;
};

// Throws ConstraintError unless every stage satisfies gcd(p_i,q_i)=1,
// 1<p_i<q_i (first stage may have p_1=1) and p_i*p_{i+1}*q_i < q_{i+1}.
void validate_cable_type(const CableType& c);

class KnotId {
public:
  enum class Kind { Tn, Torus, FamK, FamKp, FamKpp, Cable, Mirror };

  static KnotId tn(long long n);                    // oval with n arrows, any n
  static KnotId torus(long long m, long long n);    // 1 <= m < n, gcd = 1
  static KnotId fam_k(long long a, long long b);    // a >= b >= 1
  static KnotId fam_kp(long long a, long long b);   // a >= b >= 1
  static KnotId fam_kpp(long long a, long long b);  // a > 1, b >= 1
  static KnotId cable(CableType c);
  static KnotId mirror(KnotId inner);               // mirror(mirror(k)) = k

  Kind kind() const { return kind_; }
  long long a() const { return a_; }
  long long b() const { return b_; }
  long long tn_index() const { return a_; }
  long long torus_m() const { return a_; }
  long long torus_n() const { return b_; }
  const CableType& cable_type() const { return cables_; }
  const KnotId& inner() const { return *inner_; }

  bool is_family() const {
    return kind_ == Kind::FamK || kind_ == Kind::FamKp || kind_ == Kind::FamKpp;
  }

  // Canonical expression text: Tn(2), T(2,3), K(2,1), K'(1,1), K''(3,2),
  // cable[(2,3);(2,13)], mirror(...).
  std::string str() const;

  bool operator==(const KnotId& rhs) const;
  bool operator!=(const KnotId& rhs) const { return !(*this == rhs); }
  // Deterministic order: by kind, then parameters.
  bool operator<(const KnotId& rhs) const;

private:
  Kind kind_ = Kind::Tn;
  long long a_ = 0;
  long long b_ = 0;
  CableType cables_;
  std::shared_ptr<const KnotId> inner_;
};

// T_n with n < 0 is the same knot as T_{-n-1}; fold to a nonnegative index.
inline long long tn_canonical_index(long long n) { return n >= 0 ? n : -n - 1; }

}  // namespace hopfknots
