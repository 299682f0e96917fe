#pragma once

/// Plain-text dense matrix format.
///
///   first line:  n p        (p = 0 means rationals)
///   then n rows of n entries; over Q entries may be "num/den".

#include <istream>
#include <ostream>
#include <sstream>
#include <variant>

#include "jcl/field.hpp"
#include "jcl/matrix.hpp"

namespace jcl::exactnum {

using AnyMatrix = std::variant<Matrix<Rat>, Matrix<Fp>>;

inline AnyMatrix read_matrix(std::istream& in) {
    std::size_t n = 0;
    long p = -1;
    if (!(in >> n >> p) || n == 0 || p < 0)
        throw std::invalid_argument("matrix input: expected header 'n p'");
    if (p == 0) {
        Matrix<Rat> m(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::string tok;
                if (!(in >> tok)) throw std::invalid_argument("matrix input: missing entries");
                m.at(i, j) = Rat::parse(tok);
            }
        return m;
    }
    Matrix<Fp> m(n, Fp::zero(static_cast<std::uint32_t>(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long v;
            if (!(in >> v)) throw std::invalid_argument("matrix input: missing entries");
            m.at(i, j) = Fp(v, static_cast<std::uint32_t>(p));
        }
    return m;
}

inline AnyMatrix read_matrix(const std::string& text) {
    std::istringstream ss(text);
    return read_matrix(ss);
}

inline void write_matrix(std::ostream& os, const Matrix<Rat>& m) {
    os << m.dim() << " 0\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
}

inline void write_matrix(std::ostream& os, const Matrix<Fp>& m) {
    os << m.dim() << " " << m.at(0, 0).modulus() << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
}

inline void write_matrix(std::ostream& os, const AnyMatrix& m) {
    std::visit([&os](const auto& mm) { write_matrix(os, mm); }, m);
}

} // namespace jcl::exactnum
