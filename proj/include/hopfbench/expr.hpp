#pragma once

#include <map>
#include <string>

#include "hopfbench/freealg.hpp"

namespace hb {

// Value bound to a `$name` slot. Integer values may be used as exponents and
// embed into the field as n*1 when used as coefficients.
struct ParamValue {
    bool is_int = false;
    long long ival = 0;
    Elem fval = 0;

    static ParamValue integer(long long v) { return {true, v, 0}; }
    static ParamValue element(Elem e) { return {false, 0, e}; }
    Elem as_elem(const Field& F) const { return is_int ? F.from_int(ival) : fval; }
};

using ParamEnv = std::map<std::string, ParamValue>;

// Grammar (whitespace ignored):
//   rel     := expr ['=' expr]
//   expr    := ['+'|'-'] term {('+'|'-') term}
//   term    := factor {['*'] factor}
//   factor  := primary ['^' (int | '$'name | '(' intexpr ')')]
//   primary := int | '$'name | generator | '(' expr ')' | '[' expr ',' expr ']'
// Integer literals are field-element encodings. `a = b` parses as a - b.
NcPoly parse_poly(const std::string& s, const Alphabet& A, const Field& F, const ParamEnv& env = {});

}  // namespace hb
