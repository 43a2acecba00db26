#include "equidist/serialize.hpp"

#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace equidist::serialize {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string rational_to_decimal_string(const BigRational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Json points_to_json(const sequences::PointSet& P) {
    Json j;
    j["kind"] = "points";
    j["values"] = P.values();
    return j;
}

std::string points_to_csv(const sequences::PointSet& P) {
    std::string out;
    for (double v : P.values()) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

Json digits_to_json(const sequences::DigitStream& s) {
    Json j;
    j["kind"] = "digits";
    j["base"] = s.base;
    j["values"] = s.digits;
    return j;
}

std::string digits_to_csv(const sequences::DigitStream& s) {
    std::string out;
    for (int d : s.digits) {
        out += std::to_string(d);
        out += '\n';
    }
    return out;
}

Json dilation_to_json(const sequences::DilationSequence& D) {
    Json j;
    j["kind"] = "dilation";
    Json values = Json::array();
    for (const BigInt& t : D.terms()) values.push_back(t.str());
    j["values"] = std::move(values);
    return j;
}

std::string dilation_to_csv(const sequences::DilationSequence& D) {
    std::string out;
    for (const BigInt& t : D.terms()) {
        out += t.str();
        out += '\n';
    }
    return out;
}

Json trajectory_to_json(const experiments::TrajectoryReport& r, std::uint64_t seed) {
    Json j;
    j["Ns"] = r.Ns;
    j["raw"] = r.raw;
    j["normalized"] = r.normalized;
    j["normalizer"] = experiments::normalizer_name(r.normalizer);
    if (r.normalizer == experiments::NormalizerKind::Baker ||
        r.normalizer == experiments::NormalizerKind::Optimal)
        j["eps"] = r.eps;
    j["seed"] = seed;
    j["degenerate"] = r.degenerate;
    return j;
}

std::string trajectory_to_csv(const experiments::TrajectoryReport& r) {
    std::string out = "Ns,raw,normalized\n";
    for (std::size_t i = 0; i < r.Ns.size(); ++i) {
        out += std::to_string(r.Ns[i]);
        out += ',';
        out += format_double(r.raw[i]);
        out += ',';
        out += format_double(r.normalized[i]);
        out += '\n';
    }
    return out;
}

sequences::PointSet parse_points_csv(std::istream& in) {
    std::vector<double> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t pos = 0;
        double v = std::stod(line, &pos);
        pts.push_back(v);
    }
    if (pts.empty()) throw std::invalid_argument("points CSV: no values found");
    return sequences::PointSet(std::move(pts));
}

std::string scalar_report_csv(const Json& payload) {
    std::string header, row;
    bool first = true;
    for (auto it = payload.begin(); it != payload.end(); ++it) {
        if (it->is_array() || it->is_object()) continue;
        if (!first) {
            header += ',';
            row += ',';
        }
        first = false;
        header += it.key();
        if (it->is_number_float())
            row += format_double(it->get<double>());
        else if (it->is_string())
            row += it->get<std::string>();
        else
            row += it->dump();
    }
    return header + "\n" + row + "\n";
}

}  // namespace equidist::serialize
