#include "randpv/series.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace randpv {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

const std::string& label_or_throw(const CurveSeries& s, const std::string& key) {
    const auto it = s.labels.find(key);
    if (it == s.labels.end())
        throw std::invalid_argument("CurveSeries is missing the '" + key +
                                    "' label required for CSV output");
    return it->second;
}

}  // namespace

std::string to_csv(const std::vector<CurveSeries>& series) {
    std::string out = "x,y,kind,theta,c\n";
    for (const CurveSeries& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("CurveSeries: x and y lengths differ");
        const std::string& kind = label_or_throw(s, "kind");
        const std::string& theta = label_or_throw(s, "theta");
        const std::string& c = label_or_throw(s, "c");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            out += format_double(s.x[i]);
            out += ',';
            out += format_double(s.y[i]);
            out += ',';
            out += kind;
            out += ',';
            out += theta;
            out += ',';
            out += c;
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const std::vector<CurveSeries>& series) {
    nlohmann::json root = nlohmann::json::array();
    for (const CurveSeries& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("CurveSeries: x and y lengths differ");
        nlohmann::json entry;
        entry["labels"] = s.labels;
        entry["x"] = s.x;
        entry["y"] = s.y;
        root.push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(content.data(), (std::streamsize)content.size());
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace randpv
