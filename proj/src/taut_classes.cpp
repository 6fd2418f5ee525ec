#include <prym/taut_classes.hpp>

#include <sstream>

namespace prym::taut {

const char* fiber_gen_name(FiberGen g) {
    switch (g) {
        case FiberGen::L: return "l";
        case FiberGen::P: return "p";
        case FiberGen::W: return "w";
        case FiberGen::V: return "V";
        case FiberGen::C2V: return "C2V";
        case FiberGen::Sing: return "S";
    }
    return "?";
}

int mono_degree(const FiberMono& m) {
    int d = 0;
    for (int i = 0; i < kFiberGenCount; ++i)
        d += m[i] * fiber_gen_degree(static_cast<FiberGen>(i));
    return d;
}

std::string mono_to_string(const FiberMono& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kFiberGenCount; ++i) {
        for (int e = 0; e < m[i]; ++e) {
            if (!first) os << "*";
            os << fiber_gen_name(static_cast<FiberGen>(i));
            first = false;
        }
    }
    return first ? "1" : os.str();
}

FiberClass FiberClass::one() {
    FiberClass f;
    f.terms_[FiberMono{}] = 1;
    return f;
}

FiberClass FiberClass::gen(FiberGen g) {
    FiberClass f;
    FiberMono m{};
    m[static_cast<int>(g)] = 1;
    f.terms_[m] = 1;
    return f;
}

int FiberClass::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

bool FiberClass::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) != degree) return false;
    return true;
}

Rat FiberClass::coeff(const FiberMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void FiberClass::add_term(const FiberMono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FiberClass& FiberClass::operator+=(const FiberClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

FiberClass& FiberClass::operator-=(const FiberClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

FiberClass& FiberClass::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

FiberClass operator*(const FiberClass& a, const FiberClass& b) {
    FiberClass out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            FiberMono m;
            for (int i = 0; i < kFiberGenCount; ++i)
                m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            if (mono_degree(m) > 2) continue;  // truncation
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string FiberClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order: higher powers of early generators print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        std::string m = mono_to_string(it->first);
        if (a != 1 || m == "1") {
            os << rat_to_string(a);
            if (m != "1") os << "*";
        }
        if (m != "1") os << m;
        first = false;
    }
    return os.str();
}

const char* base_sym_name(BaseSym s) {
    switch (s) {
        case BaseSym::Lambda: return "lambda";
        case BaseSym::TautA: return "a";
        case BaseSym::TautB: return "b";
        case BaseSym::V: return "v";
        case BaseSym::SDelta0p: return "sd0'";
        case BaseSym::SDelta0pp: return "sd0''";
        case BaseSym::SDeltaRam: return "sdram";
    }
    return "?";
}

BaseClass::BaseClass() { c_.fill(Rat(0)); }

BaseClass BaseClass::sym(BaseSym s) {
    BaseClass b;
    b.c_[static_cast<int>(s)] = 1;
    return b;
}

Rat BaseClass::coeff(BaseSym s) const { return c_[static_cast<int>(s)]; }

void BaseClass::set_coeff(BaseSym s, Rat value) { c_[static_cast<int>(s)] = std::move(value); }

bool BaseClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

BaseClass& BaseClass::operator+=(const BaseClass& other) {
    for (int i = 0; i < kBaseSymCount; ++i) c_[i] += other.c_[i];
    return *this;
}

BaseClass& BaseClass::operator-=(const BaseClass& other) {
    for (int i = 0; i < kBaseSymCount; ++i) c_[i] -= other.c_[i];
    return *this;
}

BaseClass& BaseClass::operator*=(const Rat& scalar) {
    for (int i = 0; i < kBaseSymCount; ++i) c_[i] *= scalar;
    return *this;
}

bool operator==(const BaseClass& a, const BaseClass& b) { return a.c_ == b.c_; }

std::string BaseClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kBaseSymCount; ++i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1) os << rat_to_string(a) << "*";
        os << base_sym_name(static_cast<BaseSym>(i));
        first = false;
    }
    if (first) return "0";
    return os.str();
}

FiberMono mono(FiberGen g) {
    FiberMono m{};
    m[static_cast<int>(g)] = 1;
    return m;
}

FiberMono mono(FiberGen g1, FiberGen g2) {
    FiberMono m{};
    m[static_cast<int>(g1)] += 1;
    m[static_cast<int>(g2)] += 1;
    return m;
}

FiberPushforward FiberPushforward::standard() {
    using G = FiberGen;
    using S = BaseSym;
    FiberPushforward pf;
    BaseClass boundary = BaseClass::sym(S::SDelta0p) + BaseClass::sym(S::SDelta0pp) +
                         Rat(2) * BaseClass::sym(S::SDeltaRam);

    pf.rules_[mono(G::L, G::L)] = BaseClass::sym(S::TautA);
    pf.rules_[mono(G::L, G::W)] = BaseClass::sym(S::TautB);
    pf.rules_[mono(G::W, G::W)] = Rat(12) * BaseClass::sym(S::Lambda) - boundary;
    pf.rules_[mono(G::P, G::P)] = Rat(-1, 2) * BaseClass::sym(S::SDeltaRam);
    pf.rules_[mono(G::W, G::P)] = BaseClass::zero();
    pf.rules_[mono(G::L, G::P)] = BaseClass::zero();
    pf.rules_[mono(G::V, G::P)] = BaseClass::zero();
    pf.rules_[mono(G::W, G::V)] = Rat(16) * BaseClass::sym(S::V);
    pf.rules_[mono(G::L, G::V)] = Rat(8) * BaseClass::sym(S::V);
    pf.rules_[mono(G::V, G::V)] = BaseClass::zero();
    pf.rules_[mono(G::C2V)] = BaseClass::zero();
    pf.rules_[mono(G::Sing)] = boundary;
    return pf;
}

void FiberPushforward::set_rule(const FiberMono& m, BaseClass image) {
    if (mono_degree(m) != 2)
        throw std::invalid_argument("FiberPushforward: rules are indexed by degree-2 "
                                    "monomials");
    rules_[m] = std::move(image);
}

BaseClass FiberPushforward::push(const FiberClass& expr) const {
    BaseClass out;
    for (const auto& [m, c] : expr.terms()) {
        if (mono_degree(m) != 2)
            throw std::invalid_argument(
                "FiberPushforward: integrand must be homogeneous of degree 2, found " +
                mono_to_string(m));
        auto it = rules_.find(m);
        if (it == rules_.end())
            throw std::invalid_argument("FiberPushforward: no rule for monomial " +
                                        mono_to_string(m));
        out += c * it->second;
    }
    return out;
}

nlohmann::ordered_json FiberPushforward::rules_json() const {
    nlohmann::ordered_json j;
    for (const auto& [m, image] : rules_) j[mono_to_string(m)] = image.to_string();
    return j;
}

int rank_source_bundle() {
    // h^1 of the twisted syzygy bundle: deg(L) + 2*(g-1) with deg 8, g 9.
    return 8 + 2 * (9 - 1);
}

int rank_target_bundle() {
    // rank(V) * rank(R^1 f_* P) = 3 * 8.
    return 3 * 8;
}

BaseClass c1_r1_prym() {
    return Rat(-1) * BaseClass::sym(BaseSym::Lambda) +
           Rat(1, 4) * BaseClass::sym(BaseSym::SDeltaRam);
}

BaseClass c1_source_bundle(const FiberPushforward& rules) {
    using G = FiberGen;
    const FiberClass l = FiberClass::gen(G::L);
    const FiberClass p = FiberClass::gen(G::P);
    const FiberClass w = FiberClass::gen(G::W);
    const FiberClass V = FiberClass::gen(G::V);
    const FiberClass c2v = FiberClass::gen(G::C2V);
    const FiberClass sing = FiberClass::gen(G::Sing);

    // Chern classes of the rank-2 syzygy bundle and of its twist by P.
    FiberClass c1_m = V - l;
    FiberClass c2_m = c2v + l * l - V * l;
    FiberClass c1_mp = c1_m + Rat(2) * p;
    FiberClass c2_mp = c2_m + c1_m * p + p * p;

    FiberClass ch2 = Rat(1, 2) * (c1_mp * c1_mp) - c2_mp;
    FiberClass integrand =
        ch2 - Rat(1, 2) * (c1_mp * w) + Rat(1, 6) * (w * w + sing);

    BaseClass minus_c1 = rules.push(integrand);
    return Rat(-1) * minus_c1;
}

BaseClass c1_target_bundle(const BaseClass& c1_r1p) {
    return Rat(8) * BaseClass::sym(BaseSym::V) + Rat(3) * c1_r1p;
}

BaseClass degeneracy_locus_class(const FiberPushforward& rules) {
    return c1_target_bundle() - c1_source_bundle(rules);
}

DivisorClass pushforward_to_moduli(const BaseClass& expr, long degree) {
    if (degree <= 0)
        throw std::invalid_argument("pushforward_to_moduli: degree must be positive");
    if (expr.coeff(BaseSym::V) != 0)
        throw std::invalid_argument(
            "pushforward_to_moduli: no pushforward formula for the symbol v");

    DivisorClass out{PrymBasis(9)};
    out.set_modulo_higher_boundary(true);
    auto add_boundary_multiple = [&out](const Rat& c) {
        out.add_coeff("delta_0'", c);
        out.add_coeff("delta_0''", c);
        out.add_coeff("delta_0^ram", 2 * c);
    };

    out.add_coeff("lambda", Rat(degree) * expr.coeff(BaseSym::Lambda));
    out.add_coeff("delta_0'", Rat(degree) * expr.coeff(BaseSym::SDelta0p));
    out.add_coeff("delta_0''", Rat(degree) * expr.coeff(BaseSym::SDelta0pp));
    out.add_coeff("delta_0^ram", Rat(degree) * expr.coeff(BaseSym::SDeltaRam));

    const Rat a = expr.coeff(BaseSym::TautA);
    if (a != 0) {
        out.add_coeff("lambda", Rat(-564) * a);
        add_boundary_multiple(Rat(83) * a);
    }
    const Rat b = expr.coeff(BaseSym::TautB);
    if (b != 0) {
        out.add_coeff("lambda", Rat(252) * b);
        add_boundary_multiple(Rat(-21) * b);
    }
    return out;
}

}  // namespace prym::taut
