#include "aronson/bfile.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <vector>

namespace aronson {

void write_bfile(std::ostream& out, const GeneratedSequence& seq) {
    Term n = seq.n0();
    for (Term v : seq.terms()) {
        out << n << ' ' << v << '\n';
        ++n;
    }
}

void write_bfile(const std::string& path, const GeneratedSequence& seq) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open " + path + " for writing");
    write_bfile(f, seq);
    if (!f) throw FormatError("write failed: " + path);
}

namespace {

bool parse_term(std::string_view s, Term& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

GeneratedSequence read_bfile(std::istream& in, const std::string& origin, bool monotone) {
    std::vector<Term> terms;
    Term n0 = 0;
    bool have_first = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (terms.empty()) continue;  // allow blank lines only before data
            throw FormatError(origin + ":" + std::to_string(lineno) + ": blank line inside data");
        }
        if (line[0] == '#') {
            if (!terms.empty())
                throw FormatError(origin + ":" + std::to_string(lineno)
                                  + ": comment after data lines");
            continue;
        }
        auto sp = line.find(' ');
        Term idx, val;
        if (sp == std::string::npos || !parse_term({line.data(), sp}, idx)
            || !parse_term({line.data() + sp + 1, line.size() - sp - 1}, val))
            throw FormatError(origin + ":" + std::to_string(lineno) + ": expected 'index value'");
        if (!have_first) {
            n0 = idx;
            have_first = true;
        } else if (idx != n0 + static_cast<Term>(terms.size())) {
            throw FormatError(origin + ":" + std::to_string(lineno) + ": index "
                              + std::to_string(idx) + " not consecutive");
        }
        terms.push_back(val);
    }
    if (terms.empty()) throw FormatError(origin + ": no data lines");
    return GeneratedSequence(n0, std::move(terms), Provenance{"bfile(" + origin + ")", monotone});
}

GeneratedSequence read_bfile(const std::string& path, bool monotone) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open " + path);
    return read_bfile(f, path, monotone);
}

}  // namespace aronson
