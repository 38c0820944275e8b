#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cobord/charclass.hpp"
#include "cobord/cobordism.hpp"
#include "cobord/index_bounds.hpp"
#include "cobord/lattice.hpp"

namespace cobord {

using Json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers when they fit in 64 bits, otherwise as
/// decimal strings; rationals as {"num", "den"} with den > 0.
Json json_int(const Int& n);
Json json_rat(const Rat& q);
Json json_lattice(const IntegerLattice& lattice);
Json json_char_class(const CharClassPoly& p);
Json json_fundamental(const FundamentalVector& v);

Int parse_json_int(const Json& j);
Rat parse_json_rat(const Json& j);
CharClassPoly parse_json_char_class(const Json& j);

/// One entry point per CLI subcommand, shared with the python bindings.
Json op_index_bound(long d, long N);
Json op_chi(long d, long n);
Json op_gcd_lemma(long d, long N);
Json op_threshold(long d);
Json op_fermat(long d, long N, long e);
Json op_fund_poly(const std::string& variety_spec);
Json op_lattice(int d);
Json op_dual_lattice(int d);
Json op_hattori_stong(int d, int max_b);
Json op_check_class(const CharClassPoly& cls);
Json op_pair(const CharClassPoly& cls, const std::string& variety_spec);
Json op_chi_bundle(const std::string& variety_spec, const std::string& bundle_expr);
Json op_signature(const std::string& variety_spec);
Json op_half_euler(const std::string& variety_spec);

/// Resolves `check-class`/`pair` class arguments: either a catalogue name
/// with parameters or a path to a JSON file holding {"degree", "coords"}.
CharClassPoly resolve_class_argument(const std::string& name_or_file,
                                     const std::vector<std::string>& params);

/// Renders a JSON object as an aligned key/value table (human output).
std::string render_table(const Json& j);

}  // namespace cobord
