#include "commring/ring_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commring/errors.hpp"

namespace commring {

std::string write_ring_text(const FiniteRing& r) {
    nlohmann::ordered_json j;
    j["format"] = "commring/1";
    j["order"] = r.n;
    j["name"] = r.name;
    auto table = [&](const std::vector<uint16_t>& t) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int a = 0; a < r.n; ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int b = 0; b < r.n; ++b) row.push_back(t[size_t(a) * r.n + b]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["add"] = table(r.add);
    j["mul"] = table(r.mul);
    return j.dump(2) + "\n";
}

void write_ring_file(const FiniteRing& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << write_ring_text(r);
    if (!out) throw Error("write failed: " + path);
}

FiniteRing read_ring_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid ring file: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "commring/1")
        throw ParseError("not a commring/1 object");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw ParseError("missing integer field: order");
    const int n = j["order"].get<int>();
    if (n < 1 || n > 4096) throw ParseError("order out of range");

    auto table = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array() ||
            int(j[field].size()) != n)
            throw ParseError(std::string("field ") + field +
                             " must be an array of " + std::to_string(n) +
                             " rows");
        std::vector<std::vector<int>> t(n);
        for (int a = 0; a < n; ++a) {
            const auto& row = j[field][a];
            if (!row.is_array() || int(row.size()) != n)
                throw ParseError(std::string(field) + " row " +
                                 std::to_string(a) + " must have " +
                                 std::to_string(n) + " entries");
            for (const auto& e : row) {
                if (!e.is_number_integer())
                    throw ParseError(std::string(field) + " entries must be integers");
                t[a].push_back(e.get<int>());
            }
        }
        return t;
    };

    std::string name = j.value("name", "");
    return validate_ring(table("add"), table("mul"), name);
}

FiniteRing read_ring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_ring_text(buf.str());
}

}  // namespace commring
