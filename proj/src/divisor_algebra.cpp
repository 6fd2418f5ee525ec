#include <prym/divisor_algebra.hpp>

#include <sstream>

namespace prym {

namespace {

std::string delta_label(int i) { return "delta_" + std::to_string(i); }

std::string delta_pair_label(int i, int j) {
    return "delta_" + std::to_string(i) + ":" + std::to_string(j);
}

}  // namespace

PrymBasis::PrymBasis(int genus) : genus_(genus) {
    if (genus < 2)
        throw std::invalid_argument("PrymBasis: genus must be >= 2");
    labels_ = core_labels();
    for (int i = 1; i <= genus / 2; ++i) {
        labels_.push_back(delta_label(i));
        if (genus - i != i)  // even genus, middle index: delta_{g-i} == delta_i
            labels_.push_back(delta_label(genus - i));
        labels_.push_back(delta_pair_label(i, genus - i));
    }
}

bool PrymBasis::has_label(const std::string& label) const {
    for (const auto& l : labels_)
        if (l == label) return true;
    return false;
}

const std::vector<std::string>& PrymBasis::core_labels() {
    static const std::vector<std::string> k = {"lambda", "delta_0'", "delta_0''",
                                               "delta_0^ram"};
    return k;
}

bool PrymBasis::is_core_label(const std::string& label) {
    for (const auto& l : core_labels())
        if (l == label) return true;
    return false;
}

std::string PrymBasis::display_label(const std::string& label) {
    if (label == "lambda") return "λ";
    std::string out = label;
    if (out.rfind("delta_", 0) == 0) out = "δ_" + out.substr(6);
    return out;
}

DivisorClass::DivisorClass(PrymBasis basis) : basis_(std::move(basis)) {}

Rat DivisorClass::coeff(const std::string& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void DivisorClass::set_coeff(const std::string& label, Rat value) {
    if (!basis_.has_label(label))
        throw std::invalid_argument("DivisorClass: unknown label '" + label + "'");
    if (value == 0)
        coeffs_.erase(label);
    else
        coeffs_[label] = std::move(value);
}

void DivisorClass::add_coeff(const std::string& label, const Rat& value) {
    set_coeff(label, coeff(label) + value);
}

bool DivisorClass::is_zero() const { return coeffs_.empty(); }

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    if (!(basis_ == other.basis_))
        throw std::invalid_argument("DivisorClass: basis mismatch");
    for (const auto& [label, v] : other.coeffs_) add_coeff(label, v);
    modulo_higher_boundary_ = modulo_higher_boundary_ || other.modulo_higher_boundary_;
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    if (!(basis_ == other.basis_))
        throw std::invalid_argument("DivisorClass: basis mismatch");
    for (const auto& [label, v] : other.coeffs_) add_coeff(label, -v);
    modulo_higher_boundary_ = modulo_higher_boundary_ || other.modulo_higher_boundary_;
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [label, v] : coeffs_) v *= scalar;
    return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.basis_ == b.basis_)) return false;
    for (const auto& label : a.basis_.labels())
        if (a.coeff(label) != b.coeff(label)) return false;
    return true;
}

namespace {

// Shared term-list printer: "13*lambda - 2*delta_0' + ..." in basis order.
std::string print_terms(const PrymBasis& basis,
                        const std::map<std::string, Rat>& terms, bool display) {
    std::ostringstream os;
    bool first = true;
    for (const auto& label : basis.labels()) {
        auto it = terms.find(label);
        if (it == terms.end() || it->second == 0) continue;
        Rat c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1) os << rat_to_string(a) << "*";
        os << (display ? PrymBasis::display_label(label) : label);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace

std::string DivisorClass::to_string(bool display_names) const {
    return print_terms(basis_, coeffs_, display_names);
}

nlohmann::ordered_json DivisorClass::to_json() const {
    nlohmann::ordered_json coeffs;
    for (const auto& label : basis_.labels()) coeffs[label] = rat_to_string(coeff(label));
    nlohmann::ordered_json j;
    j["genus"] = basis_.genus();
    j["coeffs"] = std::move(coeffs);
    if (modulo_higher_boundary_) j["modulo_higher_boundary"] = true;
    return j;
}

DivisorClass DivisorClass::from_json(const nlohmann::json& j) {
    DivisorClass d{PrymBasis(j.at("genus").get<int>())};
    for (const auto& [label, v] : j.at("coeffs").items())
        d.set_coeff(label, rat_from_string(v.get<std::string>()));
    if (j.contains("modulo_higher_boundary"))
        d.set_modulo_higher_boundary(j["modulo_higher_boundary"].get<bool>());
    return d;
}

CurveClass::CurveClass(PrymBasis basis) : basis_(std::move(basis)) {}

Rat CurveClass::pairing(const std::string& label) const {
    auto it = pairings_.find(label);
    return it == pairings_.end() ? Rat(0) : it->second;
}

void CurveClass::set_pairing(const std::string& label, Rat value) {
    if (!basis_.has_label(label))
        throw std::invalid_argument("CurveClass: unknown label '" + label + "'");
    if (value == 0)
        pairings_.erase(label);
    else
        pairings_[label] = std::move(value);
}

bool CurveClass::is_zero() const { return pairings_.empty(); }

bool CurveClass::touches_higher_boundary() const {
    for (const auto& [label, v] : pairings_)
        if (!PrymBasis::is_core_label(label) && v != 0) return true;
    return false;
}

std::string CurveClass::to_string(bool display_names) const {
    return print_terms(basis_, pairings_, display_names);
}

nlohmann::ordered_json CurveClass::to_json() const {
    nlohmann::ordered_json pairings;
    for (const auto& label : basis_.labels()) pairings[label] = rat_to_string(pairing(label));
    nlohmann::ordered_json j;
    j["genus"] = basis_.genus();
    j["pairings"] = std::move(pairings);
    return j;
}

CurveClass CurveClass::from_json(const nlohmann::json& j) {
    CurveClass c{PrymBasis(j.at("genus").get<int>())};
    for (const auto& [label, v] : j.at("pairings").items())
        c.set_pairing(label, rat_from_string(v.get<std::string>()));
    return c;
}

PairingResult pair_checked(const CurveClass& curve, const DivisorClass& divisor) {
    if (!(curve.basis() == divisor.basis()))
        throw std::invalid_argument("pair: curve and divisor use different bases");
    PairingResult result;
    result.value = 0;
    for (const auto& label : curve.basis().labels())
        result.value += curve.pairing(label) * divisor.coeff(label);
    result.outside_known_support =
        divisor.modulo_higher_boundary() && curve.touches_higher_boundary();
    return result;
}

Rat pair(const CurveClass& curve, const DivisorClass& divisor) {
    return pair_checked(curve, divisor).value;
}

DivisorClass canonical_class(int genus) {
    if (genus < 2)
        throw std::invalid_argument("canonical_class: genus must be >= 2");
    DivisorClass k{PrymBasis(genus)};
    k.set_coeff("lambda", 13);
    k.set_coeff("delta_0'", -2);
    k.set_coeff("delta_0''", -2);
    k.set_coeff("delta_0^ram", -3);
    for (int i = 1; i <= genus / 2; ++i) {
        Rat c = (i == 1) ? Rat(-3) : Rat(-2);
        // Assign once per distinct label of the triple.
        k.set_coeff(delta_label(i), c);
        if (genus - i != i) k.set_coeff(delta_label(genus - i), c);
        k.set_coeff(delta_pair_label(i, genus - i), c);
    }
    return k;
}

DivisorClass pullback_from_mg(int genus, const std::map<std::string, Rat>& mg_class) {
    DivisorClass out{PrymBasis(genus)};
    for (const auto& [key, c] : mg_class) {
        if (key == "lambda") {
            out.add_coeff("lambda", c);
        } else if (key == "delta_0") {
            out.add_coeff("delta_0'", c);
            out.add_coeff("delta_0''", c);
            out.add_coeff("delta_0^ram", 2 * c);
        } else if (key.rfind("delta_", 0) == 0) {
            int i = 0;
            try {
                size_t pos = 0;
                i = std::stoi(key.substr(6), &pos);
                if (pos != key.size() - 6) i = 0;
            } catch (const std::exception&) {
                i = 0;
            }
            if (i < 1 || i > genus / 2)
                throw std::invalid_argument("pullback_from_mg: index out of range in '" +
                                            key + "'");
            out.add_coeff(delta_label(i), c);
            out.add_coeff(delta_label(genus - i), c);
            out.add_coeff(delta_pair_label(i, genus - i), c);
        } else {
            throw std::invalid_argument("pullback_from_mg: unknown key '" + key + "'");
        }
    }
    return out;
}

DivisorClass brill_noether_class(const Rat& alpha) {
    if (alpha < 0)
        throw std::invalid_argument("brill_noether_class: alpha must be >= 0");
    DivisorClass d{PrymBasis(9)};
    d.set_coeff("lambda", 366);
    d.set_coeff("delta_0'", -52);
    d.set_coeff("delta_0''", Rat(-52) - alpha);
    d.set_coeff("delta_0^ram", Rat(-187, 2));
    d.set_modulo_higher_boundary(true);
    return d;
}

}  // namespace prym
