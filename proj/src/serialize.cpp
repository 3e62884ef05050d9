#include "lovasz/serialize.hpp"

namespace lovasz {

namespace {

template <class T>
Json or_null(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const BoundReport& r) {
    Json closed = nullptr;
    if (r.closed_form) {
        closed = Json::object();
        closed["value"] = or_null(r.closed_form->value);
        closed["condition"] = r.closed_form->condition;
    }
    Json bounds = Json::object();
    bounds["hoffman"] = or_null(r.hoffman_regular);
    bounds["walkgen"] = r.walkgen_bound;
    bounds["closed_form"] = closed;
    bounds["laplacian"] = r.laplacian_bound;

    Json j = Json::object();
    j["n"] = r.n;
    j["bounds"] = bounds;
    j["dominance_ok"] = r.dominance_ok;
    j["alpha_witness"] = or_null(r.independence_witness);
    return j;
}

Json to_json(const ThetaEstimate& e) {
    Json j = Json::object();
    j["upper"] = e.upper;
    j["lower"] = or_null(e.lower);
    j["iterations"] = e.iterations;
    j["converged"] = e.converged;
    j["weights"] = e.weights;
    return j;
}

std::string to_line(const Json& j) { return j.dump(); }

}  // namespace lovasz
