#include "hopfknots/knot_id.hpp"

#include <numeric>
#include <sstream>

namespace hopfknots {

void validate_cable_type(const CableType& c) {
  if (c.stages.empty()) throw ConstraintError("cable type needs at least one stage");
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto [p, q] = c.stages[i];
    if (p < 1 || q < 1) throw ConstraintError("cable stage parameters must be positive");
    if (std::gcd(p, q) != 1)
      throw ConstraintError("cable stage (" + std::to_string(p) + "," +
                            std::to_string(q) + ") needs gcd(p,q)=1");
    if (p == 1 && i != 0)
      throw ConstraintError("p=1 is only allowed in the first cable stage");
    if (p >= q)
      throw ConstraintError("cable stage (" + std::to_string(p) + "," +
                            std::to_string(q) + ") needs p<q");
    if (i + 1 < c.stages.size()) {
      const auto [pn, qn] = c.stages[i + 1];
      if (p * pn * q >= qn)
        throw ConstraintError("cable growth condition p_i*p_{i+1}*q_i < q_{i+1} "
                              "fails between stages " + std::to_string(i + 1) +
                              " and " + std::to_string(i + 2));
    }
  }
}

KnotId KnotId::tn(long long n) {
  KnotId k;
  k.kind_ = Kind::Tn;
  k.a_ = n;
  return k;
}

KnotId KnotId::torus(long long m, long long n) {
  if (m < 1 || n < 1) throw ConstraintError("torus parameters must be positive");
  if (m >= n) throw ConstraintError("torus knot T(m,n) requires m < n");
  if (std::gcd(m, n) != 1) throw ConstraintError("torus knot T(m,n) requires gcd(m,n)=1");
  KnotId k;
  k.kind_ = Kind::Torus;
  k.a_ = m;
  k.b_ = n;
  return k;
}

static void check_family_range(KnotId::Kind kind, long long a, long long b) {
  if (kind == KnotId::Kind::FamKpp) {
    if (a <= 1 || b < 1) throw ConstraintError("K''(a,b) requires a>1 and b>=1");
  } else {
    if (b < 1 || a < b) throw ConstraintError("a>=b>=1 required");
  }
}

KnotId KnotId::fam_k(long long a, long long b) {
  check_family_range(Kind::FamK, a, b);
  KnotId k;
  k.kind_ = Kind::FamK;
  k.a_ = a;
  k.b_ = b;
  return k;
}

KnotId KnotId::fam_kp(long long a, long long b) {
  check_family_range(Kind::FamKp, a, b);
  KnotId k;
  k.kind_ = Kind::FamKp;
  k.a_ = a;
  k.b_ = b;
  return k;
}

KnotId KnotId::fam_kpp(long long a, long long b) {
  check_family_range(Kind::FamKpp, a, b);
  KnotId k;
  k.kind_ = Kind::FamKpp;
  k.a_ = a;
  k.b_ = b;
  return k;
}

KnotId KnotId::cable(CableType c) {
  validate_cable_type(c);
  KnotId k;
  k.kind_ = Kind::Cable;
  k.cables_ = std::move(c);
  return k;
}

KnotId KnotId::mirror(KnotId inner) {
  if (inner.kind_ == Kind::Mirror) return *inner.inner_;
  KnotId k;
  k.kind_ = Kind::Mirror;
  k.inner_ = std::make_shared<const KnotId>(std::move(inner));
  return k;
}

std::string KnotId::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Tn: out << "Tn(" << a_ << ")"; break;
    case Kind::Torus: out << "T(" << a_ << "," << b_ << ")"; break;
    case Kind::FamK: out << "K(" << a_ << "," << b_ << ")"; break;
    case Kind::FamKp: out << "K'(" << a_ << "," << b_ << ")"; break;
    case Kind::FamKpp: out << "K''(" << a_ << "," << b_ << ")"; break;
    case Kind::Cable: {
      out << "cable[";
      for (std::size_t i = 0; i < cables_.stages.size(); ++i) {
        if (i) out << ";";
        out << "(" << cables_.stages[i].p << "," << cables_.stages[i].q << ")";
      }
      out << "]";
      break;
    }
    case Kind::Mirror: out << "mirror(" << inner_->str() << ")"; break;
  }
  return out.str();
}

bool KnotId::operator==(const KnotId& rhs) const {
  if (kind_ != rhs.kind_) return false;
  switch (kind_) {
    case Kind::Cable: return cables_ == rhs.cables_;
    case Kind::Mirror: return *inner_ == *rhs.inner_;
    default: return a_ == rhs.a_ && b_ == rhs.b_;
  }
}

bool KnotId::operator<(const KnotId& rhs) const {
  if (kind_ != rhs.kind_) return kind_ < rhs.kind_;
  switch (kind_) {
    case Kind::Cable: {
      auto key = [](const CableType& c) {
        std::vector<std::pair<long long, long long>> v;
        for (auto s : c.stages) v.emplace_back(s.p, s.q);
        return v;
      };
      return key(cables_) < key(rhs.cables_);
    }
    case Kind::Mirror: return *inner_ < *rhs.inner_;
    default: return std::tie(a_, b_) < std::tie(rhs.a_, rhs.b_);
  }
}

}  // namespace hopfknots
