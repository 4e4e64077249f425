#include "corda/corda_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "corda/error.hpp"
#include "corda/extensions.hpp"
#include "corda/orders.hpp"
#include "corda/query.hpp"

struct corda_order {
  corda::CircularOrder order;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

corda_status to_status(corda::Status s) {
  switch (s) {
    case corda::Status::ok: return CORDA_OK;
    case corda::Status::invalid_argument: return CORDA_INVALID_ARGUMENT;
    case corda::Status::unsupported: return CORDA_UNSUPPORTED;
    case corda::Status::budget_exhausted: return CORDA_BUDGET_EXHAUSTED;
    case corda::Status::parse_error: return CORDA_PARSE_ERROR;
    case corda::Status::internal: return CORDA_INTERNAL;
  }
  return CORDA_INTERNAL;
}

template <typename F>
corda_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const corda::Error& e) {
    g_last_error = e.what();
    return to_status(e.status());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CORDA_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CORDA_INTERNAL;
  }
}

corda_status require(bool cond, const char* what) {
  if (cond) return CORDA_OK;
  g_last_error = what;
  return CORDA_INVALID_ARGUMENT;
}

// Callers hand in any integer representative; finite groups reduce mod n.
corda::GroupElement element_of(const corda_order* o, int64_t v) {
  auto cyc = std::dynamic_pointer_cast<const corda::CyclicGroup>(o->order.group);
  corda::Int x = v;
  if (cyc && cyc->modulus() > 0) {
    corda::Int m = cyc->modulus();
    x = ((x % m) + m) % m;
  }
  return o->order.group->element({x});
}

} // namespace

extern "C" {

const char* corda_version(void) { return "0.1.0"; }

const char* corda_status_name(int status) {
  switch (status) {
    case CORDA_OK: return "ok";
    case CORDA_INVALID_ARGUMENT: return "invalid-argument";
    case CORDA_UNSUPPORTED: return "unsupported";
    case CORDA_BUDGET_EXHAUSTED: return "budget-exhausted";
    case CORDA_PARSE_ERROR: return "parse-error";
    case CORDA_INTERNAL: return "internal";
    default: return "unknown";
  }
}

const char* corda_last_error(void) { return g_last_error.c_str(); }

void corda_string_free(char* s) { std::free(s); }

corda_status corda_eval_json(const char* request, char** out_result) {
  if (corda_status s = require(request && out_result, "null argument"); s != CORDA_OK) return s;
  return guarded([&] {
    std::string result = corda::eval_query_json(request);
    *out_result = copy_string(result);
    return *out_result ? CORDA_OK : CORDA_INTERNAL;
  });
}

corda_status corda_order_cyclic(int64_t n, int64_t k, corda_order** out) {
  if (corda_status s = require(out != nullptr, "null argument"); s != CORDA_OK) return s;
  return guarded([&] {
    *out = new corda_order{corda::cyclic_rot_order(corda::cyclic_group(n), k)};
    return CORDA_OK;
  });
}

corda_status corda_order_integers(corda_order** out) {
  if (corda_status s = require(out != nullptr, "null argument"); s != CORDA_OK) return s;
  return guarded([&] {
    *out = new corda_order{
        corda::secret_circular_order(corda::coordinate_lex_order(corda::cyclic_group(0)))};
    return CORDA_OK;
  });
}

const char* corda_order_tag(const corda_order* o) { return o ? o->order.tag.c_str() : nullptr; }

corda_status corda_order_eval(const corda_order* o, int64_t a, int64_t b, int64_t c,
                              int* out_sign) {
  if (corda_status s = require(o && out_sign, "null argument"); s != CORDA_OK) return s;
  return guarded([&] {
    *out_sign = o->order.eval(element_of(o, a), element_of(o, b), element_of(o, c));
    return CORDA_OK;
  });
}

corda_status corda_order_validate(const corda_order* o, const int64_t* sample, size_t len,
                                  int* out_ok, char** out_violation) {
  if (corda_status s = require(o && out_ok && (sample || len == 0), "null argument");
      s != CORDA_OK)
    return s;
  return guarded([&] {
    std::vector<corda::GroupElement> elems;
    for (size_t i = 0; i < len; ++i) elems.push_back(element_of(o, sample[i]));
    corda::AxiomReport report = corda::validate_circular_order(o->order, elems);
    *out_ok = report.ok ? 1 : 0;
    if (out_violation)
      *out_violation = report.ok ? nullptr : copy_string(report.violations.front());
    return CORDA_OK;
  });
}

corda_status corda_order_rot(const corda_order* o, int64_t g, int64_t iterations, int* out_exact,
                             char** out_value) {
  if (corda_status s = require(o && out_exact && out_value, "null argument"); s != CORDA_OK)
    return s;
  return guarded([&] {
    corda::RotOptions opts;
    if (iterations > 0) opts.iterations = iterations;
    corda::RotationValue rv = corda::rot(o->order, element_of(o, g), opts);
    *out_exact = rv.exact ? 1 : 0;
    corda::Rational value = rv.value;
    if (!rv.exact) {
      value = rv.lo + rv.hi;
      value /= 2;
    }
    *out_value = copy_string(corda::rational_string(value));
    return *out_value ? CORDA_OK : CORDA_INTERNAL;
  });
}

void corda_order_free(corda_order* o) { delete o; }

} // extern "C"
