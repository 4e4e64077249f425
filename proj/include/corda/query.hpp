#pragma once
#include <string>

namespace corda {

// Evaluates one "corda/v1" request document and renders the result document
// (a batch document with a results array for range queries).  Output is
// byte-deterministic for identical inputs.  Throws Error on malformed
// requests; an honest UNKNOWN verdict is a successful evaluation.
std::string eval_query_json(const std::string& request);

} // namespace corda
