#pragma once

#include <stdexcept>
#include <string>

namespace sutura {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SUTURA_ERROR_TYPE(Name)                                        \
  struct Name : Error {                                                \
    explicit Name(const std::string& what = #Name) : Error(what) {}    \
  }

// ring / polynomial layer
SUTURA_ERROR_TYPE(RankMismatch);
SUTURA_ERROR_TYPE(ZeroPolynomial);

// presentations
SUTURA_ERROR_TYPE(IndexOutOfRange);

// complexes / torsion
SUTURA_ERROR_TYPE(EmptyComplex);
SUTURA_ERROR_TYPE(NotSquare);
SUTURA_ERROR_TYPE(NotConnected);
SUTURA_ERROR_TYPE(EmptySupport);
SUTURA_ERROR_TYPE(ZeroAlpha);
SUTURA_ERROR_TYPE(NotInSupport);

// decomposition graphs
SUTURA_ERROR_TYPE(InvalidGraph);
SUTURA_ERROR_TYPE(InvalidColoring);
SUTURA_ERROR_TYPE(UnknownEdge);
SUTURA_ERROR_TYPE(NonSeparatingBlackEdge);

// cones
SUTURA_ERROR_TYPE(BadDecoration);

// cli / io
SUTURA_ERROR_TYPE(InvalidPD);
SUTURA_ERROR_TYPE(ParseError);
SUTURA_ERROR_TYPE(SemanticError);

#undef SUTURA_ERROR_TYPE

}  // namespace sutura
