#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/exactmat.hpp"
#include "cpg/intpoly.hpp"

namespace cpg {

/// One syllable x_offset^exponent of a defining word. Exponents are nonzero;
/// adjacent letters with equal offsets are kept as written (no free reduction).
struct Letter {
    unsigned long offset = 0;
    long exponent = 1;

    bool operator==(const Letter&) const = default;
};

struct DefiningWord {
    std::vector<Letter> letters;

    bool positive() const;
    /// Free-word length: sum of |exponent| over letters.
    unsigned long length() const;
    std::string to_string() const;  // "x0 x2 x1^-1"

    bool operator==(const DefiningWord&) const = default;
};

/// Parses `word := atom (WS atom)*`, `atom := 'x' UINT ('^' SINT)?`.
/// Throws SyntaxError with position, EmptyWord for a blank input.
DefiningWord parse_word(std::string_view text);

/// a_i = sum of exponents of letters with offset == i (mod n).
std::vector<long long> exponent_sums(const DefiningWord& w, unsigned long n);

/// f(t) = sum a_i t^i, degree < n.
IntPolynomial representer_polynomial(const DefiningWord& w, unsigned long n);

/// P_n(w): n generators, relators are w with subscripts shifted mod n.
/// Offsets in the stored word may exceed n; they reduce mod n wherever the
/// word is used, while the original spelling is kept for display.
struct CyclicPresentation {
    unsigned long n = 1;
    DefiningWord word;
};

/// circulant(exponent_sums(word, n)).
IntMatrix relation_matrix(const CyclicPresentation& p);

/// Labelled oriented graph: each edge carries initial and terminal vertices
/// plus a labelling vertex.
struct LogEdge {
    std::string init, term, label;

    bool operator==(const LogEdge&) const = default;
};

struct Log {
    std::vector<std::string> vertices;
    std::vector<LogEdge> edges;

    bool operator==(const Log&) const = default;
};

struct RelatorLetter {
    std::size_t generator = 0;  // index into generators
    long exponent = 1;

    bool operator==(const RelatorLetter&) const = default;
};

struct GenericPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<RelatorLetter>> relators;

    bool operator==(const GenericPresentation&) const = default;
};

/// One generator per vertex; per edge the relator term^-1 label^-1 init label,
/// letters in exactly that order. Throws DanglingReference for an edge naming
/// an unknown vertex.
GenericPresentation log_to_presentation(const Log& g);

/// Connected components of the graph on vertices with undirected edges
/// {init, term}; labels do not connect.
unsigned long log_components(const Log& g);

/// Relation matrix with generators as rows: (i, j) = exponent sum of
/// generator i in relator j.
IntMatrix relation_matrix(const GenericPresentation& p);

/// DOT rendering: one directed edge init -> term per LOG edge with the label
/// as edge attribute; vertices in stored order.
std::string log_to_dot(const Log& g);

std::string relator_to_string(const GenericPresentation& p, std::size_t relator_index);

}  // namespace cpg
