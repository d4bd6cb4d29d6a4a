#pragma once

#include "gkforge/gcs.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace gkforge {

// Machine-readable result of one CLI pipeline. `data` carries the full
// payload for --json; `human_data` the condensed view (dimension tables, no
// basis dumps). Reports are deterministic functions of the input.
struct Report {
    std::string command;
    std::string input_name;
    std::string input_digest;
    std::vector<Verdict> verdicts;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    nlohmann::ordered_json human_data = nlohmann::ordered_json::object();

    bool all_pass() const;
    void add(std::string check, bool pass, std::string details);
};

std::string render_human(const Report& r);
std::string render_json(const Report& r); // schema "gkforge/1"

std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t v);

} // namespace gkforge
