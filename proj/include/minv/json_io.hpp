#pragma once

#include <string>

#include "json.hpp"
#include "minv/arrangement.hpp"
#include "minv/graphs.hpp"
#include "minv/matroid.hpp"
#include "minv/polynomial.hpp"
#include "minv/report.hpp"
#include "minv/sequences.hpp"

namespace minv {

// Insertion-ordered JSON keeps CLI output byte-identical across runs.
using Json = nlohmann::ordered_json;

struct ParsedMatroid {
  Matroid matroid;
  std::string kind;  // uniform | graph | matrix | circuits
};

// {"type":"uniform","rank":k,"size":n}
// {"type":"graph","vertices":v,"edges":[[u,w,"label"],...]}
// {"type":"matrix","columns":[["1/2","0",...],...],"labels":[...]}
// {"type":"circuits","labels":[...],"circuits":[["a","b"],...]}
ParsedMatroid matroid_from_json(const Json& j);

Multigraph multigraph_from_json(const Json& j);
// One "u w" pair per line; vertex count inferred.
Multigraph multigraph_from_text(const std::string& text);
// Dispatches on leading '{'.
Multigraph multigraph_from_file(const std::string& path);

std::string read_file(const std::string& path);
Json parse_json_text(const std::string& text);  // wraps parse errors in domain_error

// {"coeffs":["2","-3","1"]} means 2 - 3q + q^2.
Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json intseq_to_json(const IntSeq& s);

// {"forms":[["1","0","-1/2"],...]}; affine forms are [c, a_1, ..., a_r].
AffineArrangement affine_from_json(const Json& j);
CentralArrangement central_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json report_to_json(const TheoremReport& r);

}  // namespace minv
