#ifndef MWT_EVAL_HPP
#define MWT_EVAL_HPP

#include <string>

#include <json.hpp>

namespace mwt {

/* Evaluate one expression of the CLI grammar (field literals, GW diagonals,
   MW symbols, residue/specialize/transfer calls) and return the normalized
   value with its invariants. Throws parse_error / value_error. */
nlohmann::ordered_json eval_expr(const std::string& expr);

}  // namespace mwt

#endif
