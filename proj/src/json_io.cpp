#include "ellf/json_io.hpp"

namespace ellf {

namespace {

json coeffs_to_json(const Cyc::Coeffs& part) {
    // dense coefficient array in the power basis, trailing zeros trimmed
    long long top = -1;
    for (const auto& [k, c] : part) top = std::max(top, k);
    json arr = json::array();
    for (long long k = 0; k <= top; ++k) {
        auto it = part.find(k);
        arr.push_back(it == part.end() ? "0" : rational_str(it->second));
    }
    return arr;
}

void coeffs_from_json(const Field& F, const json& arr, CycBuilder& b, bool sqrt_part) {
    if (!arr.is_array()) fail(Errc::ParseError, "expected coefficient array");
    long long k = 0;
    for (const auto& e : arr) {
        mpq_class c = parse_rational(e.get<std::string>());
        if (c != 0) b.add(k, c, sqrt_part);
        ++k;
    }
}

}  // namespace

json kelem_to_json(const KElem& x) {
    json digits = json::array();
    for (auto& [j, c] : x.digits()) digits.push_back(json::array({j, c}));
    return json{{"digits", digits}};
}

KElem kelem_from_json(const Field& F, const json& j) {
    if (!j.contains("digits")) fail(Errc::ParseError, "KElement needs digits");
    std::vector<std::pair<long, long>> digits;
    for (const auto& d : j.at("digits")) {
        if (!d.is_array() || d.size() != 2) fail(Errc::ParseError, "bad digit entry");
        digits.emplace_back(d[0].get<long>(), d[1].get<long>());
    }
    return KElem::from_digits(F, digits);
}

json cyc_to_json(const Cyc& x) {
    return json{{"a", coeffs_to_json(x.a_part())},
                {"b", coeffs_to_json(x.b_part())},
                {"M", x.field() ? x.field()->M : 0}};
}

Cyc cyc_from_json(const Field& F, const json& j) {
    CycBuilder b(F);
    if (j.contains("M") && j.at("M").get<long long>() != 0 && j.at("M").get<long long>() != F.M)
        fail(Errc::ParseError, "conductor mismatch");
    if (j.contains("a")) coeffs_from_json(F, j.at("a"), b, false);
    if (j.contains("b")) coeffs_from_json(F, j.at("b"), b, true);
    return b.build();
}

json stepfn_to_json(const StepFn& f) {
    json terms = json::array();
    for (const auto& t : f.terms())
        terms.push_back(json{{"rep", kelem_to_json(t.rep)},
                             {"level", t.level},
                             {"coeff", cyc_to_json(t.coeff)}});
    return json{{"terms", terms}};
}

StepFn stepfn_from_json(const Field& F, const json& j) {
    if (!j.contains("terms")) fail(Errc::ParseError, "step function needs terms");
    std::vector<StepTerm> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({kelem_from_json(F, t.at("rep")), t.at("level").get<long>(),
                         cyc_from_json(F, t.at("coeff"))});
    return StepFn::from_terms(F, terms);
}

json shellfn_to_json(const ShellFn& f) {
    json out = stepfn_to_json(f.step());
    json tails = json::array();
    for (const auto& t : f.tails())
        tails.push_back(json{{"direction", t.toward_zero ? "toward-zero" : "toward-infinity"},
                             {"start", t.start},
                             {"ratio", rational_str(t.ratio)},
                             {"coeff", cyc_to_json(t.coeff)}});
    out["tails"] = tails;
    return out;
}

ShellFn shellfn_from_json(const Field& F, const json& j) {
    StepFn step = stepfn_from_json(F, j);
    std::vector<GeoTail> tails;
    if (j.contains("tails")) {
        for (const auto& t : j.at("tails")) {
            std::string dir = t.at("direction").get<std::string>();
            if (dir != "toward-zero" && dir != "toward-infinity")
                fail(Errc::ParseError, "bad tail direction");
            tails.push_back({dir == "toward-zero", t.at("start").get<long>(),
                             parse_rational(t.at("ratio").get<std::string>()),
                             cyc_from_json(F, t.at("coeff"))});
        }
    }
    return ShellFn(std::move(step), std::move(tails));
}

json laurent_to_json(const Laurent& f) {
    json arr = json::array();
    for (const auto& [n, c] : f.coeffs()) arr.push_back(json::array({n, cyc_to_json(c)}));
    return json{{"coeffs", arr}};
}

namespace {
json bound_to_json(const std::optional<long>& b, bool open, bool upper) {
    json j;
    j["exp"] = b ? json(*b) : json(upper ? "inf" : "-inf");
    j["open"] = open;
    return j;
}
}  // namespace

json zeta_to_json(const ZetaValue& z) {
    return json{{"num", laurent_to_json(z.value.num())},
                {"den", laurent_to_json(z.value.den())},
                {"annulus", json::array({bound_to_json(z.domain.lo, z.domain.lo_open, false),
                                         bound_to_json(z.domain.hi, z.domain.hi_open, true)})},
                {"text", z.value.str()}};
}

json character_to_json(const Character& chi) {
    json uv = json::array();
    for (const auto& [u, v] : chi.table())
        uv.push_back(json::array({kelem_to_json(u), cyc_to_json(v)}));
    json lambda;
    switch (chi.lambda_kind()) {
        case LambdaKind::Formal: lambda = "FORMAL"; break;
        case LambdaKind::FormalDual: lambda = "FORMAL_DUAL"; break;
        case LambdaKind::Concrete: lambda = cyc_to_json(chi.lambda_value()); break;
    }
    return json{{"level", chi.level()}, {"unit_values", uv}, {"lambda", lambda}};
}

Character character_from_json(const Field& F, const json& j) {
    long level = j.at("level").get<long>();
    Character chi = Character::unramified(F);
    if (level >= 1) {
        std::vector<std::pair<KElem, Cyc>> images;
        for (const auto& e : j.at("unit_values"))
            images.emplace_back(kelem_from_json(F, e[0]), cyc_from_json(F, e[1]));
        chi = Character::make(F, level, images);
    }
    const json& lam = j.at("lambda");
    if (lam.is_string()) {
        std::string s = lam.get<std::string>();
        if (s == "FORMAL") return chi;
        if (s == "FORMAL_DUAL") return chi.dual();
        return chi.with_lambda(Cyc(F, parse_rational(s)));
    }
    return chi.with_lambda(cyc_from_json(F, lam));
}

json padic_context_to_json(const PadicContext& ctx) {
    return json{{"p", ctx.p()},
                {"d", ctx.degree()},
                {"precision", ctx.precision()},
                {"m_embed", ctx.m_embed()},
                {"m_star", ctx.m_star()},
                {"teich_seed", ctx.teich_seed()}};
}

}  // namespace ellf
