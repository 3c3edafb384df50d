#include "flowgraph/csv.hpp"

#include <cctype>

namespace flowgraph {

std::vector<std::string> csv_split(std::string_view line, const CsvOptions& opts) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == opts.delimiter) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
        ++i;
    }
    out.push_back(std::move(cur));
    return out;
}

std::string csv_quote(std::string_view field, const CsvOptions& opts) {
    bool needs = false;
    for (char c : field) {
        if (c == opts.delimiter || c == '"' || c == '\n' || c == '\r') {
            needs = true;
            break;
        }
    }
    if (!field.empty() &&
        (std::isspace(static_cast<unsigned char>(field.front())) ||
         std::isspace(static_cast<unsigned char>(field.back()))))
        needs = true;
    if (!needs) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string csv_join(const std::vector<std::string>& fields, const CsvOptions& opts) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(opts.delimiter);
        out += csv_quote(fields[i], opts);
    }
    return out;
}

}  // namespace flowgraph
