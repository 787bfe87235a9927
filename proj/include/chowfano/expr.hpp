#pragma once

#include <stdexcept>
#include <string>

#include "chowfano/rational.hpp"

namespace chowfano {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

struct ExprResult {
    std::string normal_form;
    bool integrated = false;
    Rat integral;
};

// Grammar: product of atoms, a context selector, an optional integral suffix.
//   atoms    s[i,j,...]   Schubert classes
//            h / H        hyperplane classes (H only on the tower)
//            c<k>Q, c<k>M named bundle classes on the conic rings
//            FY           the conic-surface fundamental class
//   context  @G(k,n) | @Hconic | @Pconic
//   suffix   !int
ExprResult eval_schubert_expr(const std::string& input);

}  // namespace chowfano
