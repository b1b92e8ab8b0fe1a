#include "qtri/qtorus.hpp"

#include <sstream>

namespace qtri {

TorusPresentation::TorusPresentation(std::vector<std::string> ids,
                                     std::vector<std::vector<std::int64_t>> q)
    : ids_(std::move(ids)), q_(std::move(q)) {
    const int r = static_cast<int>(ids_.size());
    if (static_cast<int>(q_.size()) != r)
        throw std::invalid_argument("TorusPresentation: matrix size mismatch");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(q_[i].size()) != r)
            throw std::invalid_argument("TorusPresentation: matrix not square");
        for (int j = 0; j <= i; ++j)
            if (q_[i][j] != -q_[j][i])
                throw std::invalid_argument("TorusPresentation: Q not antisymmetric at (" +
                                            ids_[i] + "," + ids_[j] + ")");
    }
    for (int i = 0; i < r; ++i) {
        if (!index_.emplace(ids_[i], i).second)
            throw std::invalid_argument("TorusPresentation: duplicate vertex id " + ids_[i]);
    }
}

int TorusPresentation::indexOf(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (const auto& [i, v] : o.entries_) r.add(i, v);
    return r;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector r = *this;
    for (auto& [i, v] : r.entries_) v = -v;
    return r;
}

bool ExponentVector::operator<(const ExponentVector& o) const {
    // lexicographic over the full ordered vertex list; absent entries are 0
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (a == entries_.end()) {
            // this has 0 at b->first, other has b->second
            if (b->second != 0) return 0 < b->second;
            ++b;
        } else if (b == o.entries_.end()) {
            if (a->second != 0) return a->second < 0;
            ++a;
        } else if (a->first < b->first) {
            if (a->second != 0) return a->second < 0;
            ++a;
        } else if (b->first < a->first) {
            if (b->second != 0) return 0 < b->second;
            ++b;
        } else {
            if (a->second != b->second) return a->second < b->second;
            ++a; ++b;
        }
    }
    return false;
}

std::int64_t qForm(const TorusPresentation& p, const ExponentVector& a, const ExponentVector& b) {
    std::int64_t s = 0;
    for (const auto& [i, ki] : a.entries())
        for (const auto& [j, kj] : b.entries())
            s += p.q(i, j) * ki * kj;
    return s;
}

TorusElement TorusElement::monomial(PresentationPtr p, const ExponentVector& k, const LaurentScalar& c) {
    TorusElement e(std::move(p));
    for (const auto& [i, v] : k.entries()) {
        (void)v;
        if (i < 0 || i >= e.pres_->rank())
            throw std::invalid_argument("TorusElement::monomial: exponent index out of range");
    }
    if (!c.isZero()) e.terms_[k] = c;
    return e;
}

TorusElement TorusElement::scalar(PresentationPtr p, const LaurentScalar& c) {
    return monomial(std::move(p), ExponentVector(), c);
}

TorusElement TorusElement::generator(PresentationPtr p, const std::string& id, std::int64_t power) {
    int i = p->indexOf(id);
    if (i < 0) throw std::invalid_argument("TorusElement::generator: unknown vertex id " + id);
    ExponentVector k;
    k.set(i, power);
    return monomial(std::move(p), k);
}

LaurentScalar TorusElement::coeff(const ExponentVector& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentScalar() : it->second;
}

bool TorusElement::isMonomial(ExponentVector* k, LaurentScalar* c) const {
    if (terms_.size() != 1) return false;
    if (k) *k = terms_.begin()->first;
    if (c) *c = terms_.begin()->second;
    return true;
}

void TorusElement::requireSame(const TorusElement& o) const {
    if (!pres_ || !o.pres_ || !pres_->sameAs(*o.pres_))
        throw std::invalid_argument("TorusElement: presentation mismatch");
}

void TorusElement::addTerm(const ExponentVector& k, const LaurentScalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    requireSame(o);
    TorusElement r = *this;
    for (const auto& [k, c] : o.terms_) r.addTerm(k, c);
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator*(const TorusElement& o) const {
    requireSame(o);
    TorusElement r(pres_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            // x^k x^{k'} = hq^{<k,k'>_Q} x^{k+k'}
            LaurentScalar c = (c1 * c2).shifted(qForm(*pres_, k1, k2));
            r.addTerm(k1 + k2, c);
        }
    return r;
}

TorusElement TorusElement::operator*(const LaurentScalar& c) const {
    TorusElement r(pres_);
    for (const auto& [k, c0] : terms_) r.addTerm(k, c0 * c);
    return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
    if (!pres_ || !o.pres_) return terms_.empty() && o.terms_.empty();
    return pres_->sameAs(*o.pres_) && terms_ == o.terms_;
}

TorusElement TorusElement::reflected() const {
    TorusElement r(pres_);
    for (const auto& [k, c] : terms_) r.terms_[k] = c.reflected();
    return r;
}

std::optional<std::int64_t> TorusElement::degreeIn(int index) const {
    if (terms_.empty()) return 0;
    std::int64_t d = terms_.begin()->first.at(index);
    for (const auto& [k, c] : terms_)
        if (k.at(index) != d) return std::nullopt;
    return d;
}

std::optional<std::int64_t> TorusElement::degreeIn(const std::string& id) const {
    int i = pres_ ? pres_->indexOf(id) : -1;
    if (i < 0) throw std::invalid_argument("degreeIn: unknown vertex id " + id);
    return degreeIn(i);
}

Rational TorusElement::specializeClassical(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [k, c] : terms_) {
        Rational m(1);
        for (const auto& [i, e] : k.entries()) {
            auto it = assignment.find(pres_->id(i));
            if (it == assignment.end())
                throw std::invalid_argument("specializeClassical: missing value for " + pres_->id(i));
            Rational base = it->second;
            std::int64_t p = e;
            if (p < 0) { base = Rational(1) / base; p = -p; }
            for (std::int64_t t = 0; t < p; ++t) m = m * base;
        }
        // hq = 1 on the coefficient
        Integer c1 = c.atOne();
        if (c1 > std::numeric_limits<std::int64_t>::max() || c1 < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("specializeClassical: coefficient out of range");
        total = total + m * Rational(static_cast<std::int64_t>(c1));
    }
    return total;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!k.isZero()) {
            os << "*x^{";
            bool f2 = true;
            for (const auto& [i, e] : k.entries()) {
                if (!f2) os << ",";
                f2 = false;
                os << pres_->id(i) << ":" << e;
            }
            os << "}";
        }
    }
    return os.str();
}

MultLinearHom::MultLinearHom(PresentationPtr source, PresentationPtr target,
                             std::vector<std::vector<std::int64_t>> h)
    : source_(std::move(source)), target_(std::move(target)), h_(std::move(h)) {
    const int r = source_->rank(), s = target_->rank();
    if (static_cast<int>(h_.size()) != r)
        throw std::invalid_argument("MultLinearHom: H row count mismatch");
    for (const auto& row : h_)
        if (static_cast<int>(row.size()) != s)
            throw std::invalid_argument("MultLinearHom: H column count mismatch");
    // H Q' H^t = Q, checked exactly
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < r; ++v) {
            std::int64_t acc = 0;
            for (int a = 0; a < s; ++a) {
                if (h_[u][a] == 0) continue;
                for (int b = 0; b < s; ++b) acc += h_[u][a] * target_->q(a, b) * h_[v][b];
            }
            if (acc != source_->q(u, v))
                throw std::invalid_argument("MultLinearHom: H Q' H^t != Q at (" + source_->id(u) +
                                            "," + source_->id(v) + "): got " + std::to_string(acc) +
                                            ", want " + std::to_string(source_->q(u, v)));
        }
}

ExponentVector MultLinearHom::mapExponent(const ExponentVector& k) const {
    ExponentVector r;
    for (int a = 0; a < target_->rank(); ++a) {
        std::int64_t acc = 0;
        for (const auto& [u, ku] : k.entries()) acc += ku * h_[u][a];
        if (acc != 0) r.set(a, acc);
    }
    return r;
}

TorusElement MultLinearHom::apply(const TorusElement& e) const {
    if (!e.presentation() || !e.presentation()->sameAs(*source_))
        throw std::invalid_argument("MultLinearHom::apply: element not over the source torus");
    TorusElement r(target_);
    for (const auto& [k, c] : e.terms()) r.addTerm(mapExponent(k), c);
    return r;
}

}  // namespace qtri
