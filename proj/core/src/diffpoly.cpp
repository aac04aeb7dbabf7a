#include "moyallax/diffpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moyallax {

DiffMonomial::DiffMonomial(std::vector<JetFactor> jets, int eps, int mu)
    : jets_(std::move(jets)), eps_(eps), mu_(mu) {
    if (mu_ < 0) throw std::invalid_argument("DiffMonomial: negative mu exponent");
    std::sort(jets_.begin(), jets_.end(),
              [](const JetFactor& a, const JetFactor& b) { return a.var < b.var; });
    std::vector<JetFactor> merged;
    for (const auto& f : jets_) {
        if (f.mult < 0) throw std::invalid_argument("DiffMonomial: negative multiplicity");
        if (f.mult == 0) continue;
        if (!merged.empty() && merged.back().var == f.var)
            merged.back().mult += f.mult;
        else
            merged.push_back(f);
    }
    jets_ = std::move(merged);
}

int DiffMonomial::jet_count() const {
    int n = 0;
    for (const auto& f : jets_) n += f.mult;
    return n;
}

int DiffMonomial::sum_kx() const {
    int n = 0;
    for (const auto& f : jets_) n += f.var.kx * f.mult;
    return n;
}

int DiffMonomial::sum_ky() const {
    int n = 0;
    for (const auto& f : jets_) n += f.var.ky * f.mult;
    return n;
}

std::pair<int, int> DiffMonomial::bidegree() const {
    return {sum_kx() - eps_, sum_ky() - mu_};
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    std::vector<JetFactor> jets;
    jets.reserve(jets_.size() + o.jets_.size());
    auto a = jets_.begin();
    auto b = o.jets_.begin();
    while (a != jets_.end() && b != o.jets_.end()) {
        if (a->var == b->var) {
            jets.push_back({a->var, a->mult + b->mult});
            ++a, ++b;
        } else if (a->var < b->var) {
            jets.push_back(*a++);
        } else {
            jets.push_back(*b++);
        }
    }
    jets.insert(jets.end(), a, jets_.end());
    jets.insert(jets.end(), b, o.jets_.end());
    DiffMonomial r;
    r.jets_ = std::move(jets);
    r.eps_ = eps_ + o.eps_;
    r.mu_ = mu_ + o.mu_;
    return r;
}

DiffMonomial DiffMonomial::shifted(int deps, int dmu) const {
    if (mu_ + dmu < 0) throw std::invalid_argument("DiffMonomial: shift below mu = 0");
    DiffMonomial r = *this;
    r.eps_ += deps;
    r.mu_ += dmu;
    return r;
}

DiffMonomial DiffMonomial::with_jet_replaced(JetVar from, JetVar to) const {
    DiffMonomial r = without_one(from);
    return r.times(DiffMonomial::jet(to.kx, to.ky));
}

DiffMonomial DiffMonomial::without_one(JetVar var) const {
    DiffMonomial r = *this;
    for (auto it = r.jets_.begin(); it != r.jets_.end(); ++it) {
        if (it->var == var) {
            if (--it->mult == 0) r.jets_.erase(it);
            return r;
        }
    }
    throw std::invalid_argument("DiffMonomial: jet not present");
}

int DiffMonomial::multiplicity(JetVar var) const {
    for (const auto& f : jets_)
        if (f.var == var) return f.mult;
    return 0;
}

std::strong_ordering DiffMonomial::operator<=>(const DiffMonomial& o) const {
    // Lexicographic comparison of the expanded (multiplicity-unfolded) sorted
    // jet sequences, walked run by run.
    std::size_t ia = 0, ib = 0;
    int used_a = 0, used_b = 0;
    while (ia < jets_.size() && ib < o.jets_.size()) {
        if (auto c = jets_[ia].var <=> o.jets_[ib].var; c != 0) return c;
        int na = jets_[ia].mult - used_a;
        int nb = o.jets_[ib].mult - used_b;
        if (na == nb) {
            ++ia, ++ib;
            used_a = used_b = 0;
        } else if (na < nb) {
            ++ia;
            used_a = 0;
            used_b += na;
        } else {
            ++ib;
            used_b = 0;
            used_a += nb;
        }
    }
    bool more_a = ia < jets_.size();
    bool more_b = ib < o.jets_.size();
    if (more_a != more_b) return more_a ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = eps_ <=> o.eps_; c != 0) return c;
    return mu_ <=> o.mu_;
}

DiffPoly DiffPoly::constant(const Scalar& c, const TruncationContext& t) {
    DiffPoly r(t);
    r.add_term(DiffMonomial::one(), c);
    return r;
}

DiffPoly DiffPoly::monomial(const DiffMonomial& m, const Scalar& c, const TruncationContext& t) {
    DiffPoly r(t);
    r.add_term(m, c);
    return r;
}

DiffPoly DiffPoly::jet(int kx, int ky, const TruncationContext& t) {
    return monomial(DiffMonomial::jet(kx, ky), Scalar(1), t);
}

Scalar DiffPoly::coefficient(const DiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void DiffPoly::add_term(const DiffMonomial& m, const Scalar& c) {
    if (c.is_zero() || !trunc_.contains(m.eps(), m.mu())) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r(trunc_.intersect(o.trunc_));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
    DiffPoly r(trunc_.intersect(o.trunc_));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r(trunc_.intersect(o.trunc_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

DiffPoly DiffPoly::operator*(const Scalar& c) const {
    DiffPoly r(trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

DiffPoly DiffPoly::times_eps_mu(int deps, int dmu) const {
    DiffPoly r(trunc_);
    for (const auto& [m, c] : terms_) {
        if (m.mu() + dmu < 0) continue;
        r.add_term(m.shifted(deps, dmu), c);
    }
    return r;
}

DiffPoly DiffPoly::restricted(const TruncationContext& t) const {
    DiffPoly r(t);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

DiffPoly DiffPoly::eps_slice(int eps) const {
    DiffPoly r(trunc_);
    for (const auto& [m, c] : terms_)
        if (m.eps() == eps) r.terms_.emplace(m, c);
    return r;
}

int DiffPoly::min_eps_exponent() const {
    int e = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.eps() < e) e = m.eps();
        first = false;
    }
    return e;
}

int DiffPoly::max_jet_count() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.jet_count());
    return n;
}

bool DiffPoly::operator==(const DiffPoly& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
}

namespace {

DiffPoly derive(const DiffPoly& f, bool along_x) {
    DiffPoly r(f.trunc());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& factor : m.jets()) {
            JetVar raised{factor.var.kx + (along_x ? 1 : 0), factor.var.ky + (along_x ? 0 : 1)};
            r.add_term(m.with_jet_replaced(factor.var, raised), c * Scalar(factor.mult));
        }
    }
    return r;
}

}  // namespace

DiffPoly dx(const DiffPoly& f) { return derive(f, true); }
DiffPoly dy(const DiffPoly& f) { return derive(f, false); }

std::optional<std::pair<int, int>> bidegree(const DiffPoly& f) {
    if (f.is_zero()) return std::pair<int, int>{0, 0};
    auto it = f.terms().begin();
    auto deg = it->first.bidegree();
    for (++it; it != f.terms().end(); ++it)
        if (it->first.bidegree() != deg) return std::nullopt;
    return deg;
}

bool is_homogeneous_of(const DiffPoly& f, std::pair<int, int> deg) {
    for (const auto& [m, c] : f.terms())
        if (m.bidegree() != deg) return false;
    return true;
}

DiffPoly partial_jet(const DiffPoly& f, JetVar v) {
    DiffPoly r(f.trunc());
    for (const auto& [m, c] : f.terms()) {
        int mult = m.multiplicity(v);
        if (mult > 0) r.add_term(m.without_one(v), c * Scalar(mult));
    }
    return r;
}

DiffPoly variational_derivative(const DiffPoly& f) {
    std::vector<JetVar> seen;
    for (const auto& [m, c] : f.terms())
        for (const auto& factor : m.jets()) seen.push_back(factor.var);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    DiffPoly r(f.trunc());
    for (const JetVar& v : seen) {
        DiffPoly t = partial_jet(f, v);
        for (int k = 0; k < v.kx; ++k) t = dx(t);
        for (int k = 0; k < v.ky; ++k) t = dy(t);
        if ((v.kx + v.ky) % 2 != 0) t = -t;
        r = r + t;
    }
    return r;
}

std::map<int, DiffPoly> scale_u(const DiffPoly& f) {
    std::map<int, DiffPoly> parts;
    for (const auto& [m, c] : f.terms()) {
        auto [it, inserted] = parts.emplace(m.jet_count(), DiffPoly(f.trunc()));
        it->second.add_term(m, c);
    }
    return parts;
}

bool agree_on(const DiffPoly& f, const DiffPoly& g, const TruncationContext& window) {
    TruncationContext w = window.intersect(f.trunc()).intersect(g.trunc());
    return f.restricted(w).terms() == g.restricted(w).terms();
}

std::string to_string(const DiffMonomial& m) {
    std::ostringstream os;
    bool empty = true;
    auto sep = [&] {
        if (!empty) os << "*";
        empty = false;
    };
    if (m.eps() != 0) {
        sep();
        os << "eps";
        if (m.eps() != 1) os << "^" << m.eps();
    }
    if (m.mu() != 0) {
        sep();
        os << "mu";
        if (m.mu() != 1) os << "^" << m.mu();
    }
    for (const auto& f : m.jets()) {
        sep();
        os << "u[" << f.var.kx << "," << f.var.ky << "]";
        if (f.mult != 1) os << "^" << f.mult;
    }
    if (empty) os << "1";
    return os.str();
}

std::string to_string(const DiffPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (!(m == DiffMonomial::one())) os << "*" << to_string(m);
    }
    return os.str();
}

}  // namespace moyallax
