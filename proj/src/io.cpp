#include "lq/io.hpp"

#include "lq/syntax.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lq {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        out.push_back(trim(line));
    }
    return out;
}

// round-trippable, and no "-0"
std::string num(double x) {
    if (x == 0)
        x = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_num(double x) {
    if (std::abs(x) < 1e-12)
        x = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

QubitSet parse_qubits(const std::string &rest, int line) {
    QubitSet out;
    std::istringstream in(rest);
    std::string w;
    while (in >> w) {
        if (w.size() < 2 || w[0] != 'q' || w.find_first_not_of("0123456789", 1) != std::string::npos)
            throw SyntaxError("expected a qubit name, found '" + w + "'", line, 1);
        out.push_back(std::stoi(w.substr(1)));
    }
    return out;
}

std::string qubit_list(const QubitSet &qs) {
    std::string s;
    for (int q : qs)
        s += " q" + std::to_string(q);
    return s;
}

} // namespace

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Amplitude> parse_amplitudes(std::string_view text) {
    std::vector<Amplitude> out;
    auto ls = lines_of(text);
    for (size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].empty())
            continue;
        std::istringstream in(ls[i]);
        double re, im;
        std::string extra;
        if (!(in >> re >> im) || (in >> extra))
            throw SyntaxError("expected 're im'", static_cast<int>(i + 1), 1);
        out.emplace_back(re, im);
    }
    return out;
}

std::string format_amplitudes(std::span<const Amplitude> amps) {
    std::string s;
    for (auto a : amps)
        s += num(a.real()) + " " + num(a.imag()) + "\n";
    return s;
}

std::string format_state(const QuantumState &s) {
    std::string out = "[";
    auto amps = s.amplitudes();
    for (size_t i = 0; i < amps.size(); ++i) {
        if (i)
            out += ", ";
        out += short_num(amps[i].real()) + " " + short_num(amps[i].imag());
    }
    return out + "]";
}

Model parse_model(std::string_view text) {
    Model m;
    std::string aqs_text;
    auto ls = lines_of(text);
    for (size_t i = 0; i < ls.size(); ++i) {
        const auto &l = ls[i];
        int line = static_cast<int>(i + 1);
        if (l.empty())
            continue;
        if (l.rfind("qubits", 0) == 0) {
            std::istringstream in(l.substr(6));
            if (!(in >> m.qubits) || m.qubits < 1)
                throw SyntaxError("expected 'qubits n'", line, 1);
        } else if (l.rfind("block:", 0) == 0 || l.rfind("pure:", 0) == 0) {
            aqs_text += l + "\n";
        } else if (l.rfind("bind ", 0) == 0) {
            auto colon = l.find(':'), eq = l.find('=');
            if (colon == std::string::npos || eq == std::string::npos || eq < colon)
                throw SyntaxError("expected 'bind name : type = value'", line, 1);
            std::string name = trim(l.substr(5, colon - 5));
            if (name.empty() || is_reserved_word(name))
                throw SyntaxError("bad name in binding", line, 1);
            auto type = parse_type(trim(l.substr(colon + 1, eq - colon - 1)));
            auto v = parse_value(trim(l.substr(eq + 1)), type);
            if (m.interp.count(name))
                throw SyntaxError("name '" + name + "' bound twice", line, 1);
            m.interp[name] = v;
            m.types[name] = type;
        } else {
            throw SyntaxError("unrecognized model line '" + l + "'", line, 1);
        }
    }
    m.aqs = parse_aqs(aqs_text);
    if (m.qubits == 0) {
        for (const auto &b : m.aqs.blocks)
            for (int q : b)
                m.qubits = std::max(m.qubits, q);
        for (int q : m.aqs.pure)
            m.qubits = std::max(m.qubits, q);
    }
    if (m.qubits < 1)
        throw SyntaxError("model has no qubits", 1, 1);
    for (const auto &b : m.aqs.blocks)
        for (int q : b)
            if (q > m.qubits)
                throw SyntaxError("qubit q" + std::to_string(q) + " outside the register", 1, 1);
    for (int q : m.aqs.pure)
        if (q > m.qubits)
            throw SyntaxError("qubit q" + std::to_string(q) + " outside the register", 1, 1);
    return m;
}

std::string format_model(const Model &m) {
    std::string s = "qubits " + std::to_string(m.qubits) + "\n" + to_text(m.aqs);
    for (const auto &[k, v] : m.interp)
        s += "bind " + k + " : " + to_string(type_of(v)) + " = " + to_string(v) + "\n";
    return s;
}

OracleReport oracle_report(const QuantumState &s, double tol) {
    OracleReport r;
    r.blocks = entanglement_relation(s, tol).blocks;
    for (int q = 1; q <= s.qubits(); ++q)
        if (is_base_state(s, q, tol))
            r.base.push_back(q);
    return r;
}

std::string format_oracle(const OracleReport &r) {
    std::string s;
    for (const auto &b : r.blocks)
        s += "block:" + qubit_list(b) + "\n";
    return s + "pure:" + qubit_list(r.base) + "\n";
}

OracleReport parse_oracle(std::string_view text) {
    OracleReport r;
    auto ls = lines_of(text);
    for (size_t i = 0; i < ls.size(); ++i) {
        const auto &l = ls[i];
        int line = static_cast<int>(i + 1);
        if (l.empty())
            continue;
        if (l.rfind("block:", 0) == 0)
            r.blocks.push_back(parse_qubits(l.substr(6), line));
        else if (l.rfind("pure:", 0) == 0)
            for (int q : parse_qubits(l.substr(5), line))
                r.base.push_back(q);
        else
            throw SyntaxError("unrecognized oracle line '" + l + "'", line, 1);
    }
    return r;
}

} // namespace lq
