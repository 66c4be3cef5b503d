#include "ramsum/serialize.hpp"

namespace ramsum {

Json to_json(const EvenCoeffTable& table) {
    Json out;
    if (table.moduli.size() == 1) {
        out["modulus"] = table.moduli.front();
    } else {
        out["modulus"] = table.moduli;
    }
    Json coeffs = Json::array();
    for (const auto& [ds, value] : table.coeffs) coeffs.push_back(Json{{"d", ds}, {"value", to_string(value)}});
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json to_json(const VerificationReport& report) {
    Json out;
    out["identity"] = report.identity;
    out["bound"] = report.bound;
    out["status"] = report.ok() ? "ok" : "mismatch";
    if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        out["first_mismatch"] = Json{{"index", mm.index}, {"lhs", to_string(mm.lhs)}, {"rhs", to_string(mm.rhs)}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

Json to_json(const Hypermatrix& a) {
    Json entries = Json::array();
    for (const auto& q : a.entries()) entries.push_back(to_string(q));
    return Json{{"dim", a.dim()}, {"order", a.order()}, {"entries", std::move(entries)}};
}

}  // namespace ramsum
