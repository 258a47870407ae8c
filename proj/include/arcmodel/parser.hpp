/* Recursive-descent parser for polynomial expressions.

   expr     := term (('+'|'-') term)*
   term     := factor ('*' factor)*
   factor   := base ('^' uint)?
   base     := rational | ident | '(' expr ')'
   rational := int ('/' uint)?
   int      := '-'? uint
   ident    := [A-Za-z_][A-Za-z0-9_]*

   Whitespace is insignificant; implicit multiplication ("x y") is a syntax
   error. Syntax errors carry the byte offset of the offending token. */

#pragma once

#include <string>

#include "arcmodel/multipoly.hpp"

namespace arcmodel {

Poly parse_poly(const std::string& text, const VarSetPtr& vars,
                const FieldSpec& field);

// Canonical rendering; parse_poly(render_poly(p)) == p.
inline std::string render_poly(const Poly& p) { return p.to_string(); }

}  // namespace arcmodel
