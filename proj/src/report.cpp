#include "gkforge/report.hpp"

#include <sstream>

namespace gkforge {

bool Report::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void Report::add(std::string check, bool pass, std::string details) {
    verdicts.push_back({std::move(check), pass, std::move(details)});
}

std::string render_human(const Report& r) {
    std::ostringstream out;
    out << "gkforge " << r.command << "\n";
    out << "input: " << r.input_name << " (digest " << r.input_digest << ")\n";
    for (const auto& v : r.verdicts)
        out << (v.pass ? "[PASS] " : "[FAIL] ") << v.check << ": " << v.details << "\n";
    if (!r.human_data.empty()) {
        for (const auto& [k, v] : r.human_data.items())
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    out << "overall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["schema"] = "gkforge/1";
    doc["command"] = r.command;
    doc["input"] = r.input_name;
    doc["input_digest"] = r.input_digest;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"check", v.check}, {"pass", v.pass}, {"details", v.details}});
    doc["verdicts"] = std::move(verdicts);
    doc["data"] = r.data;
    return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace gkforge
