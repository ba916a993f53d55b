#include <nlohmann/json.hpp>

#include "condw/postulates.hpp"

namespace condw {

std::string reports_to_json(std::span<const PostulateReport> reports) {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    bool all_passed = true;
    for (const auto& r : reports) {
        nlohmann::ordered_json rec;
        rec["postulate"] = to_string(r.postulate);
        rec["mode"] = r.mode ? nlohmann::ordered_json(to_string(*r.mode)) : nlohmann::ordered_json();
        rec["verdict"] = r.passed ? "pass" : "fail";
        rec["instances"] = r.instances;
        rec["search_bounds"] = r.search_bounds;
        rec["seed"] = r.seed;
        if (r.witness) {
            nlohmann::ordered_json w = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.witness->fields) w[k] = v;
            rec["witness"] = std::move(w);
        } else {
            rec["witness"] = nullptr;
        }
        all_passed = all_passed && r.passed;
        doc["reports"].push_back(std::move(rec));
    }
    doc["passed"] = all_passed;
    return doc.dump(2);
}

}  // namespace condw
