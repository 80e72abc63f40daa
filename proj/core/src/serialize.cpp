#include "wr/serialize.hpp"

#include <algorithm>
#include <limits>

namespace wr::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& need(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

uint64_t as_u64(const json& j, const char* what)
{
    if (!j.is_number_integer() || (j.is_number_integer() && j.get<int64_t>() < 0 && !j.is_number_unsigned()))
        bad(std::string(what) + " must be a nonnegative integer");
    return j.get<uint64_t>();
}

} // namespace

json big_to_json(const BigInt& x)
{
    if (x >= std::numeric_limits<int64_t>::min() && x <= std::numeric_limits<int64_t>::max())
        return json(x.convert_to<int64_t>());
    return json(x.str());
}

BigInt big_from_json(const json& j)
{
    if (j.is_number_unsigned()) return BigInt(j.get<uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<int64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) bad("not an integer: " + s);
        return BigInt(s);
    }
    bad("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& x)
{
    return json::array({big_to_json(boost::multiprecision::numerator(x)),
                        big_to_json(boost::multiprecision::denominator(x))});
}

Rational rational_from_json(const json& j)
{
    if (j.is_array() && j.size() == 2) {
        BigInt d = big_from_json(j[1]);
        if (d == 0) bad("zero denominator");
        return Rational(big_from_json(j[0]), d);
    }
    return Rational(big_from_json(j));
}

json to_json(FieldCtx k)
{
    return json{{"p", k.p()}, {"e", k.e()}, {"modulus", k.modulus()}};
}

FieldCtx field_from_json(const json& j)
{
    uint64_t p = as_u64(need(j, "p"), "p");
    uint64_t e = as_u64(need(j, "e"), "e");
    if (e > 64) throw Error(ErrorCode::DegreeOutOfRange, "e = " + std::to_string(e));
    FieldCtx k = make_field(p, unsigned(e));
    if (j.contains("modulus")) {
        std::vector<uint32_t> m;
        try {
            m = j.at("modulus").get<std::vector<uint32_t>>();
        } catch (const json::exception&) {
            bad("modulus must be a list of integers");
        }
        if (m != k.modulus())
            throw Error(ErrorCode::ContextMismatch, "modulus " + j.at("modulus").dump() +
                                                        " is not the deterministic modulus " +
                                                        json(k.modulus()).dump());
    }
    return k;
}

json to_json(const FqElem& x)
{
    json a = json::array();
    for (uint32_t c : x.coeffs())
        a.push_back(c);
    return a;
}

FqElem elem_from_json(FieldCtx k, const json& j)
{
    if (j.is_number_integer()) return FqElem::from_int(k, j.get<int64_t>());
    if (!j.is_array() || j.size() != k.e())
        bad("element must be an array of " + std::to_string(k.e()) + " integers: " + j.dump());
    Coeffs c;
    for (auto& v : j) {
        uint64_t x = as_u64(v, "coefficient");
        if (x >= k.p()) bad("coefficient " + std::to_string(x) + " not reduced mod p");
        c.push_back(uint32_t(x));
    }
    return FqElem(k, std::move(c));
}

json to_json(const FqPoly& f)
{
    json a = json::array();
    for (auto& [ex, c] : f.terms())
        a.push_back(json::array({ex, to_json(c)}));
    return a;
}

FqPoly poly_from_json(FieldCtx k, const json& j)
{
    if (!j.is_array()) bad("polynomial must be an array of [exponent, element] pairs");
    std::vector<FqPoly::Term> t;
    for (auto& term : j) {
        if (!term.is_array() || term.size() != 2) bad("bad term " + term.dump());
        t.emplace_back(as_u64(term[0], "exponent"), elem_from_json(k, term[1]));
    }
    return FqPoly(k, std::move(t));
}

json to_json(const AdditiveOp& A)
{
    json a = json::array();
    for (auto& c : A.coeffs())
        a.push_back(to_json(c));
    return json{{"coeffs_F", a}};
}

AdditiveOp additive_from_json(FieldCtx k, const json& j)
{
    const json& a = need(j, "coeffs_F");
    if (!a.is_array()) bad("coeffs_F must be an array");
    std::vector<FqElem> c;
    for (auto& x : a)
        c.push_back(elem_from_json(k, x));
    return AdditiveOp(k, std::move(c));
}

json to_json(const WittVec& u)
{
    json a = json::array();
    for (auto& c : u.coords)
        a.push_back(to_json(c));
    return json{{"n", u.n()}, {"coords", a}};
}

WittVec witt_from_json(FieldCtx k, const json& j)
{
    uint64_t n = as_u64(need(j, "n"), "n");
    const json& a = need(j, "coords");
    if (!a.is_array() || a.size() != n) bad("coords must have n entries");
    std::vector<FqElem> c;
    for (auto& x : a)
        c.push_back(elem_from_json(k, x));
    return WittVec(k, std::move(c));
}

json to_json(const CoverSpec& c)
{
    json op;
    switch (c.kind) {
    case CoverSpec::Kind::witt: op = json{{"witt", c.n}}; break;
    case CoverSpec::Kind::additive: op = json{{"additive", to_json(c.additive_op())}}; break;
    case CoverSpec::Kind::witt_additive: {
        json a = json::array();
        for (auto& w : c.op)
            a.push_back(to_json(w));
        op = json{{"witt_additive", json{{"n", c.n}, {"coeffs_F", a}}}};
        break;
    }
    }
    json rhs = json::array();
    for (auto& f : c.rhs.coords)
        rhs.push_back(to_json(f));
    return json{{"field", to_json(c.ctx)}, {"operator", op}, {"rhs", rhs}, {"label", c.label}};
}

CoverSpec cover_from_json(const json& j)
{
    FieldCtx k = field_from_json(need(j, "field"));
    const json& op = need(j, "operator");
    const json& rj = need(j, "rhs");
    if (!rj.is_array() || rj.empty()) bad("rhs must be a nonempty array of polynomials");
    std::vector<FqPoly> rhs;
    for (auto& f : rj)
        rhs.push_back(poly_from_json(k, f));
    std::string label = j.value("label", std::string());
    WittPoly w(k, rhs);
    if (op.contains("witt")) {
        uint64_t n = as_u64(op.at("witt"), "witt length");
        if (n != rhs.size())
            throw Error(ErrorCode::LengthMismatch, "witt length " + std::to_string(n) + " but rhs has " +
                                                       std::to_string(rhs.size()) + " coordinates");
        return CoverSpec::witt(w, label);
    }
    if (op.contains("additive")) {
        if (rhs.size() != 1) throw Error(ErrorCode::LengthMismatch, "additive cover takes one rhs polynomial");
        return CoverSpec::additive(additive_from_json(k, op.at("additive")), rhs[0], label);
    }
    if (op.contains("witt_additive")) {
        const json& wa = op.at("witt_additive");
        uint64_t n = as_u64(need(wa, "n"), "n");
        if (n != rhs.size()) throw Error(ErrorCode::LengthMismatch, "operator length differs from rhs");
        std::vector<WittVec> coeffs;
        for (auto& x : need(wa, "coeffs_F")) {
            WittVec v = witt_from_json(k, x);
            if (v.n() != n) throw Error(ErrorCode::LengthMismatch, "coefficient of the wrong length");
            coeffs.push_back(v);
        }
        return CoverSpec::witt_additive(std::move(coeffs), w, label);
    }
    bad("operator must be {\"witt\": n}, {\"additive\": ...} or {\"witt_additive\": ...}");
}

json to_json(const Filtration& f)
{
    json segs = json::array();
    for (auto& s : f.segments)
        segs.push_back(json::array({big_to_json(boost::multiprecision::numerator(s.last)),
                                    big_to_json(boost::multiprecision::denominator(s.last)),
                                    big_to_json(s.order)}));
    return json{{"numbering", f.numbering == Numbering::lower ? "lower" : "upper"}, {"segments", segs}};
}

Filtration filtration_from_json(const json& j)
{
    Filtration f;
    std::string num = need(j, "numbering").is_string() ? j.at("numbering").get<std::string>() : "";
    if (num == "lower")
        f.numbering = Numbering::lower;
    else if (num == "upper")
        f.numbering = Numbering::upper;
    else
        bad("numbering must be \"lower\" or \"upper\"");
    const json& segs = need(j, "segments");
    if (!segs.is_array()) bad("segments must be an array");
    for (auto& s : segs) {
        if (!s.is_array() || s.size() != 3) bad("segment must be [index_num, index_den, order]: " + s.dump());
        BigInt d = big_from_json(s[1]);
        if (d <= 0) bad("segment denominator must be positive");
        f.segments.push_back({Rational(big_from_json(s[0]), d), big_from_json(s[2])});
    }
    f.validate();
    return f;
}

json to_json(const AbelianInvariants& inv)
{
    json a = json::array();
    for (unsigned x : inv.exps)
        a.push_back(big_to_json(ipow(BigInt(inv.p), x)));
    return a;
}

AbelianInvariants invariants_from_json(uint32_t p, const json& j)
{
    if (!j.is_array()) bad("invariants must be an array of orders");
    AbelianInvariants inv{p, {}};
    for (auto& x : j) {
        int k = exact_log(big_from_json(x), p);
        if (k < 1) throw Error(ErrorCode::InvalidProfile, "invariant " + x.dump() + " is not a power of p > 1");
        inv.exps.push_back(unsigned(k));
    }
    std::sort(inv.exps.rbegin(), inv.exps.rend());
    return inv;
}

json to_json(const ActionProfile& a)
{
    json j{{"p", a.p}, {"filtration", to_json(a.filtration)}, {"v", a.v}};
    if (a.g2_invariants) j["g2_invariants"] = to_json(*a.g2_invariants);
    if (a.s) j["s"] = *a.s;
    return j;
}

ActionProfile profile_from_json(const json& j)
{
    ActionProfile a;
    uint64_t p = as_u64(need(j, "p"), "p");
    if (p > std::numeric_limits<uint32_t>::max() || !is_prime_u32(p))
        throw Error(ErrorCode::InvalidProfile, "p = " + std::to_string(p) + " is not prime");
    a.p = uint32_t(p);
    a.filtration = filtration_from_json(need(j, "filtration"));
    a.v = unsigned(as_u64(need(j, "v"), "v"));
    if (j.contains("g2_invariants") && !j.at("g2_invariants").is_null())
        a.g2_invariants = invariants_from_json(a.p, j.at("g2_invariants"));
    if (j.contains("s") && !j.at("s").is_null()) a.s = unsigned(as_u64(j.at("s"), "s"));
    a.validate();
    return a;
}

json to_json(const Report& r)
{
    json v = json::array();
    for (auto& x : r.verdicts)
        v.push_back(json{{"rule", x.rule}, {"verdict", verdict_name(x.verdict)}, {"witness", x.witness}});
    json j{{"g", big_to_json(r.g)},
           {"ratio1", rational_to_json(r.ratio1)},
           {"ratio2", rational_to_json(r.ratio2)},
           {"is_big", r.is_big},
           {"is_local_big", r.is_local_big},
           {"sieve_verdicts", v}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const TowerLevel& l)
{
    return json{{"degree", big_to_json(l.degree)}, {"conductor", l.conductor}, {"label", l.label}};
}

json to_json(const CoverAnalysis& a)
{
    json ladder = json::array();
    for (auto& l : a.ladder)
        ladder.push_back(to_json(l));
    return json{{"degree", big_to_json(a.degree)},
                {"conductor", a.conductor},
                {"genus", big_to_json(a.genus)},
                {"ladder", ladder}};
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
}

} // namespace wr::io
