#pragma once

#include <string>
#include <string_view>

#include "diamond/element.hpp"
#include "diamond/rewriting.hpp"

namespace diamond {

/// Parses a system file. Statements are separated by ';' or newlines and
/// '#' starts a comment:
///
///   theory assoc|comm|mixed|magma|path
///   vars x y            central t (mixed)
///   vertices 1 2        arrow a: 1 -> 2 (path)
///   order deglex|weighted|lex|series|graded [x<y<z]
///   weights x:-1 y:1/2
///   field 7
///   rule y*x -> x*y + 1
///   relation x^2 - y
///
/// Every rule is validated; errors carry the line and column.
RewritingSystem parse_system(std::string_view text);

/// Parses an expression over the system's generators.
Element parse_element(const RewritingSystem& sys, std::string_view text);
Element parse_element(const Theory& theory, Field field,
                      std::string_view text);

/// Terms in descending order: "x^2*y + 2*x", "y^2 - x", "0".
std::string format_element(const Theory& theory, const MonomialOrder& order,
                           const Element& a);
std::string format_element(const RewritingSystem& sys, const Element& a);

/// "lead -> lower"
std::string format_rule(const RewritingSystem& sys, const Rule& r);

/// A system file that parses back to an equivalent system.
std::string format_system(const RewritingSystem& sys);

}  // namespace diamond
