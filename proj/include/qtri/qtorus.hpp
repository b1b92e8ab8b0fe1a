#pragma once

#include "qtri/scalar.hpp"
#include "qtri/weight.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtri {

/// Presentation of a quantum torus T(Q): an ordered index set of vertex ids
/// and an antisymmetric integer matrix Q on it. Generators x_u, x_v satisfy
/// x_u x_v = hq^{2Q(u,v)} x_v x_u.
class TorusPresentation {
public:
    TorusPresentation(std::vector<std::string> ids, std::vector<std::vector<std::int64_t>> q);

    int rank() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int i) const { return ids_[i]; }
    int indexOf(const std::string& id) const;          // -1 if absent
    std::int64_t q(int i, int j) const { return q_[i][j]; }
    const std::vector<std::vector<std::int64_t>>& qMatrix() const { return q_; }

    bool sameAs(const TorusPresentation& o) const { return this == &o || (ids_ == o.ids_ && q_ == o.q_); }

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<std::int64_t>> q_;
    std::map<std::string, int> index_;
};

using PresentationPtr = std::shared_ptr<const TorusPresentation>;

/// Sparse integer exponent vector over a presentation's index set.
/// Ordering is lexicographic over the ordered vertex list.
class ExponentVector {
public:
    ExponentVector() = default;

    std::int64_t at(int i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? 0 : it->second;
    }
    void set(int i, std::int64_t v) {
        if (v == 0) entries_.erase(i); else entries_[i] = v;
    }
    void add(int i, std::int64_t v) { set(i, at(i) + v); }

    bool isZero() const { return entries_.empty(); }
    const std::map<int, std::int64_t>& entries() const { return entries_; }

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-() const;
    ExponentVector operator-(const ExponentVector& o) const { return *this + (-o); }
    bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }
    bool operator<(const ExponentVector& o) const;  // dense lex over index order

private:
    std::map<int, std::int64_t> entries_;
};

/// <k, k'>_Q = sum Q_ij k_i k'_j
std::int64_t qForm(const TorusPresentation& p, const ExponentVector& a, const ExponentVector& b);

/// Element of T(Q): finite R-linear combination of Weyl-normalized
/// monomials x^k. Products follow x^k x^{k'} = hq^{<k,k'>_Q} x^{k+k'}.
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(PresentationPtr p) : pres_(std::move(p)) {}

    static TorusElement monomial(PresentationPtr p, const ExponentVector& k,
                                 const LaurentScalar& c = LaurentScalar(1));
    static TorusElement scalar(PresentationPtr p, const LaurentScalar& c);
    /// generator x_v
    static TorusElement generator(PresentationPtr p, const std::string& id, std::int64_t power = 1);

    const PresentationPtr& presentation() const { return pres_; }
    bool isZero() const { return terms_.empty(); }
    int termCount() const { return static_cast<int>(terms_.size()); }
    const std::map<ExponentVector, LaurentScalar>& terms() const { return terms_; }

    /// coefficient of x^k (zero scalar if absent)
    LaurentScalar coeff(const ExponentVector& k) const;
    /// single term?  If so reports it.
    bool isMonomial(ExponentVector* k = nullptr, LaurentScalar* c = nullptr) const;

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator*(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement operator*(const LaurentScalar& c) const;
    bool operator==(const TorusElement& o) const;
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    /// scalar reflection on coefficients; fixes normalized monomials
    TorusElement reflected() const;

    /// common exponent at vertex v across all terms, or nullopt if mixed.
    /// The zero element counts as homogeneous of any degree; returns 0.
    std::optional<std::int64_t> degreeIn(const std::string& id) const;
    std::optional<std::int64_t> degreeIn(int index) const;

    /// hq = 1, x_v = assignment(v); multiplicative on monomials
    Rational specializeClassical(const std::map<std::string, Rational>& assignment) const;

    std::string str() const;

    void addTerm(const ExponentVector& k, const LaurentScalar& c);

private:
    void requireSame(const TorusElement& o) const;
    PresentationPtr pres_;
    std::map<ExponentVector, LaurentScalar> terms_;
};

/// Multiplicatively linear homomorphism psi_H : T(Q) -> T(Q'), x^k -> x^{kH},
/// defined when H Q' H^t = Q (checked exactly at construction).
class MultLinearHom {
public:
    MultLinearHom(PresentationPtr source, PresentationPtr target,
                  std::vector<std::vector<std::int64_t>> h);

    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }
    const std::vector<std::vector<std::int64_t>>& h() const { return h_; }

    ExponentVector mapExponent(const ExponentVector& k) const;  // k -> kH
    TorusElement apply(const TorusElement& e) const;

private:
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<std::vector<std::int64_t>> h_;
};

}  // namespace qtri
