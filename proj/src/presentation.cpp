#include "cpg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cpg/errors.hpp"

namespace cpg {

bool DefiningWord::positive() const {
    return std::all_of(letters.begin(), letters.end(),
                       [](const Letter& l) { return l.exponent > 0; });
}

unsigned long DefiningWord::length() const {
    unsigned long len = 0;
    for (const Letter& l : letters) len += static_cast<unsigned long>(std::abs(l.exponent));
    return len;
}

std::string DefiningWord::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out << ' ';
        out << 'x' << letters[i].offset;
        if (letters[i].exponent != 1) out << '^' << letters[i].exponent;
    }
    return out.str();
}

DefiningWord parse_word(std::string_view text) {
    DefiningWord w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_digits = [&](const char* what) -> unsigned long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError(std::string("expected ") + what, start);
        try {
            return std::stoul(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            throw SyntaxError(std::string("value out of range for ") + what, start);
        }
    };
    for (;;) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != 'x') throw SyntaxError("expected 'x'", pos);
        ++pos;
        Letter l;
        l.offset = parse_digits("generator subscript");
        l.exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            long sign = 1;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                if (text[pos] == '-') sign = -1;
                ++pos;
            }
            l.exponent = sign * static_cast<long>(parse_digits("exponent"));
            if (l.exponent == 0) throw SyntaxError("zero exponent", pos);
        }
        w.letters.push_back(l);
    }
    if (w.letters.empty()) throw EmptyWord();
    return w;
}

std::vector<long long> exponent_sums(const DefiningWord& w, unsigned long n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<long long> sums(n, 0);
    for (const Letter& l : w.letters) sums[l.offset % n] += l.exponent;
    return sums;
}

IntPolynomial representer_polynomial(const DefiningWord& w, unsigned long n) {
    std::vector<long long> sums = exponent_sums(w, n);
    std::vector<mpz_class> coeffs;
    coeffs.reserve(sums.size());
    for (long long s : sums) coeffs.emplace_back(static_cast<long>(s));
    return IntPolynomial(std::move(coeffs));
}

IntMatrix relation_matrix(const CyclicPresentation& p) {
    return circulant(exponent_sums(p.word, p.n));
}

GenericPresentation log_to_presentation(const Log& g) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);

    auto lookup = [&](const std::string& v) -> std::size_t {
        auto it = index.find(v);
        if (it == index.end()) throw DanglingReference("edge references unknown vertex " + v);
        return it->second;
    };

    GenericPresentation pres;
    pres.generators = g.vertices;
    pres.relators.reserve(g.edges.size());
    for (const LogEdge& e : g.edges) {
        std::size_t i = lookup(e.init), t = lookup(e.term), l = lookup(e.label);
        pres.relators.push_back({{t, -1}, {l, -1}, {i, 1}, {l, 1}});
    }
    return pres;
}

unsigned long log_components(const Log& g) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);

    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const LogEdge& e : g.edges) {
        auto it = index.find(e.init);
        auto jt = index.find(e.term);
        if (it == index.end() || jt == index.end())
            throw DanglingReference("edge references unknown vertex");
        parent[find(it->second)] = find(jt->second);
    }
    unsigned long components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) ++components;
    return components;
}

IntMatrix relation_matrix(const GenericPresentation& p) {
    IntMatrix m(p.generators.size(), p.relators.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const RelatorLetter& l : p.relators[j]) m.at(l.generator, j) += l.exponent;
    return m;
}

std::string log_to_dot(const Log& g) {
    std::ostringstream out;
    out << "digraph log {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (const LogEdge& e : g.edges)
        out << "  \"" << e.init << "\" -> \"" << e.term << "\" [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string relator_to_string(const GenericPresentation& p, std::size_t relator_index) {
    std::ostringstream out;
    const auto& rel = p.relators.at(relator_index);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (i) out << ' ';
        out << p.generators[rel[i].generator];
        if (rel[i].exponent != 1) out << '^' << rel[i].exponent;
    }
    return out.str();
}

}  // namespace cpg
