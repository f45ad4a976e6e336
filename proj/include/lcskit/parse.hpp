#pragma once

#include <string>
#include <string_view>

#include "lcskit/form.hpp"

namespace lcskit {

/// Expression grammar shared by scalars and forms:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := power (('*'|'/') power)*
///   power   := primary ('^' ['-'] primary)*
///   primary := INT | NAME | 'd'NAME | sin(NAME) | cos(NAME) | '(' expr ')'
/// '^' is exponentiation when the right operand is a literal integer and
/// the wedge product otherwise; '*' and '/' act gradedly (division needs a
/// degree-0 divisor). All arithmetic happens eagerly in canonical form.
DifferentialForm parse_form(const Chart& chart, std::string_view text);

/// parse_form restricted to degree 0.
ScalarExpr parse_scalar(const Chart& chart, std::string_view text);

/// Chart file: one declaration per line.
///   coord <name> [angular|collar]
///   param <name>
/// Blank lines and '#' comments are ignored.
Chart parse_chart(std::string_view text);

struct StructurePair {
    DifferentialForm omega;
    DifferentialForm theta;
};

/// Structure file: `omega = <form>` and `theta = <form>` lines.
StructurePair parse_structure(const Chart& chart, std::string_view text);

std::string chart_to_string(const Chart& chart);
std::string structure_to_string(const StructurePair& s);

} // namespace lcskit
