#include "stabbounds/measurement_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace stabbounds {

namespace {

constexpr const char* kHeader = "stabbounds-measurements v1";

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token, int line) {
    try {
        size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + token + "'");
    }
}

int parse_int(const std::string& token, int line) {
    try {
        size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ParseError::ParseError(int line_, const std::string& message)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message : message),
      line(line_) {}

MeasurementRecord parse_measurement_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header_seen = false;

    std::optional<std::string> family;
    std::optional<int> qubits;
    std::vector<std::pair<int, int>> edges;
    std::map<int, double> outcome_map;
    std::vector<std::pair<std::string, double>> observables;
    std::string label;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kHeader)
                throw ParseError(lineno, std::string("expected header '") + kHeader + "'");
            header_seen = true;
            continue;
        }

        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::vector<std::string> args;
        for (std::string tok; ls >> tok;) args.push_back(tok);

        if (key == "family") {
            if (args.size() != 1 || (args[0] != "graph" && args[0] != "ghz"))
                throw ParseError(lineno, "family must be 'graph' or 'ghz'");
            if (family) throw ParseError(lineno, "duplicate family line");
            family = args[0];
        } else if (key == "qubits") {
            if (args.size() != 1) throw ParseError(lineno, "qubits takes one integer");
            if (qubits) throw ParseError(lineno, "duplicate qubits line");
            qubits = parse_int(args[0], lineno);
            if (*qubits < 1 || *qubits > kMaxQubits)
                throw ParseError(lineno, "qubit count out of range");
        } else if (key == "edge") {
            if (args.size() != 2) throw ParseError(lineno, "edge takes two endpoints");
            edges.emplace_back(parse_int(args[0], lineno), parse_int(args[1], lineno));
        } else if (key == "outcome") {
            if (args.size() != 2) throw ParseError(lineno, "outcome takes an index and a value");
            const int k = parse_int(args[0], lineno);
            const double v = parse_number(args[1], lineno);
            if (outcome_map.count(k))
                throw ParseError(lineno, "duplicate outcome for generator " + std::to_string(k));
            if (std::abs(v) > 1.0 + 1e-12)
                throw ParseError(lineno, "outcome out of physical range [-1, 1]");
            outcome_map[k] = v;
        } else if (key == "observable") {
            if (args.size() != 2) throw ParseError(lineno, "observable takes a label and a value");
            const double v = parse_number(args[1], lineno);
            if (std::abs(v) > 1.0 + 1e-12)
                throw ParseError(lineno, "observable out of physical range [-1, 1]");
            observables.emplace_back(args[0], v);
        } else if (key == "label") {
            std::string rest;
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) rest += ' ';
                rest += args[i];
            }
            label = rest;
        } else {
            throw ParseError(lineno, "unknown directive '" + key + "'");
        }
    }

    if (!header_seen) throw ParseError(0, std::string("missing header '") + kHeader + "'");
    if (!family) throw ParseError(0, "missing family line");
    if (!qubits) throw ParseError(0, "missing qubits line");
    if (*family == "ghz" && !edges.empty()) throw ParseError(0, "ghz family takes no edges");

    try {
        StabilizerSpec spec = (*family == "graph") ? StabilizerSpec::graph(*qubits, edges)
                                                   : StabilizerSpec::ghz(*qubits);
        std::vector<double> outcomes(static_cast<size_t>(*qubits));
        for (int k = 1; k <= *qubits; ++k) {
            const auto it = outcome_map.find(k);
            if (it == outcome_map.end())
                throw ParseError(0, "missing outcome for generator " + std::to_string(k));
            outcomes[static_cast<size_t>(k) - 1] = it->second;
        }
        for (const auto& [k, v] : outcome_map)
            if (k < 1 || k > *qubits)
                throw ParseError(0, "outcome index " + std::to_string(k) + " out of range");
        std::vector<std::pair<PauliString, double>> extras;
        for (const auto& [lab, v] : observables)
            extras.emplace_back(PauliString::from_label(lab), v);
        return MeasurementRecord(std::move(spec), std::move(outcomes), std::move(extras), label);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
}

MeasurementRecord load_measurement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measurement_text(buf.str());
}

std::string format_measurement_record(const MeasurementRecord& record) {
    std::ostringstream out;
    out << kHeader << "\n";
    if (!record.label.empty()) out << "label " << record.label << "\n";
    out << "family " << (record.spec.family == StabilizerSpec::Family::Ghz ? "ghz" : "graph")
        << "\n";
    out << "qubits " << record.spec.n << "\n";
    for (const auto& [a, b] : record.spec.edges) out << "edge " << a << " " << b << "\n";
    for (size_t k = 0; k < record.outcomes.size(); ++k)
        out << "outcome " << (k + 1) << " " << fmt(record.outcomes[k]) << "\n";
    for (const auto& [p, v] : record.extra_observables)
        out << "observable " << p.label() << " " << fmt(v) << "\n";
    return out.str();
}

void save_measurement_file(const MeasurementRecord& record, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << format_measurement_record(record);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace stabbounds
