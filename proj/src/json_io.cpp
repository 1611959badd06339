#include "oneforms/json_io.hpp"

namespace oneforms {

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(ErrorCode::InvalidDocument, "complex values are [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json to_json(const SpherePoint& p) {
    if (p.infinite) return json("inf");
    return to_json(p.value);
}

SpherePoint sphere_point_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return SpherePoint::inf();
        fail(ErrorCode::InvalidDocument, "sphere points are [re, im] or \"inf\"");
    }
    return SpherePoint(complex_from_json(j));
}

json to_json(const MobiusMap& t) {
    return json::array({to_json(t.a), to_json(t.b), to_json(t.c), to_json(t.d)});
}

MobiusMap mobius_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        fail(ErrorCode::InvalidDocument, "mobius maps are [[a],[b],[c],[d]]");
    return mobius_normalize(complex_from_json(j[0]), complex_from_json(j[1]),
                            complex_from_json(j[2]), complex_from_json(j[3]));
}

namespace {

json complex_list(const std::vector<cplx>& v) {
    json out = json::array();
    for (const cplx& z : v) out.push_back(to_json(z));
    return out;
}

json point_list(const std::vector<SpherePoint>& v) {
    json out = json::array();
    for (const SpherePoint& p : v) out.push_back(to_json(p));
    return out;
}

std::vector<cplx> complex_list_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidDocument, "expected an array of [re, im]");
    std::vector<cplx> out;
    for (const json& e : j) out.push_back(complex_from_json(e));
    return out;
}

std::vector<SpherePoint> point_list_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidDocument, "expected an array of points");
    std::vector<SpherePoint> out;
    for (const json& e : j) out.push_back(sphere_point_from_json(e));
    return out;
}

} // namespace

json to_json(const FormDocument& doc) {
    json out;
    out["representation"] = representation_name(doc.representation);
    out["s"] = doc.s;
    if (doc.tolerance) out["tolerance"] = *doc.tolerance;
    switch (doc.representation) {
        case Representation::ResiduePole:
            out["residues"] = complex_list(doc.rp->residues);
            out["poles"] = point_list(doc.rp->poles);
            break;
        case Representation::Coefficient:
            out["numerator"] = complex_list(doc.coef->numerator);
            out["denominator"] = complex_list(doc.coef->denominator);
            break;
        case Representation::ZeroPole:
            out["zeros"] = point_list(doc.zp->zeros);
            out["poles"] = point_list(doc.zp->poles);
            out["lambda"] = to_json(doc.zp->lambda);
            out["chart"] = doc.zp->chart;
            break;
    }
    return out;
}

FormDocument form_document_from_json(const json& j) {
    if (!j.is_object() || !j.contains("representation") || !j.contains("s"))
        fail(ErrorCode::InvalidDocument, "form documents need 'representation' and 's'");
    FormDocument doc;
    doc.representation = representation_from_name(j["representation"].get<std::string>());
    doc.s = j["s"].get<int>();
    if (j.contains("tolerance")) doc.tolerance = j["tolerance"].get<double>();
    switch (doc.representation) {
        case Representation::ResiduePole: {
            if (!j.contains("residues") || !j.contains("poles"))
                fail(ErrorCode::InvalidDocument, "residue_pole documents need residues and poles");
            ResiduePoleForm f;
            f.residues = complex_list_from_json(j["residues"]);
            f.poles = point_list_from_json(j["poles"]);
            doc.rp = std::move(f);
            break;
        }
        case Representation::Coefficient: {
            if (!j.contains("numerator") || !j.contains("denominator"))
                fail(ErrorCode::InvalidDocument,
                     "coefficient documents need numerator and denominator");
            CoefficientForm f;
            f.numerator = complex_list_from_json(j["numerator"]);
            f.denominator = complex_list_from_json(j["denominator"]);
            f.s = doc.s;
            doc.coef = std::move(f);
            break;
        }
        case Representation::ZeroPole: {
            if (!j.contains("zeros") || !j.contains("poles") || !j.contains("lambda") ||
                !j.contains("chart"))
                fail(ErrorCode::InvalidDocument,
                     "zero_pole documents need zeros, poles, lambda, chart");
            ZeroPoleForm f;
            f.zeros = point_list_from_json(j["zeros"]);
            f.poles = point_list_from_json(j["poles"]);
            f.lambda = complex_from_json(j["lambda"]);
            f.chart = j["chart"].get<int>();
            f.s = doc.s;
            doc.zp = std::move(f);
            break;
        }
    }
    return doc;
}

json to_json(const FiniteMobiusGroup& g) {
    json out;
    out["order"] = g.order();
    out["type"] = g.tag.name();
    json elements = json::array();
    for (const MobiusMap& t : g.elements) elements.push_back(to_json(t));
    out["elements"] = std::move(elements);
    return out;
}

json to_json(const MPoint& m) {
    json out;
    out["s"] = m.s;
    out["residues"] = complex_list(m.residues);
    out["poles"] = complex_list(m.poles);
    return out;
}

MPoint mpoint_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("residues") || !j.contains("poles"))
        fail(ErrorCode::InvalidDocument, "quotient points need s, residues, poles");
    MPoint m;
    m.s = j["s"].get<int>();
    m.residues = complex_list_from_json(j["residues"]);
    m.poles = complex_list_from_json(j["poles"]);
    return m;
}

json to_json(const FlatSurfaceInvariants& inv) {
    json out;
    out["cone_angles"] = inv.cone_angles;
    out["circumferences"] = inv.circumferences;
    return out;
}

} // namespace oneforms
