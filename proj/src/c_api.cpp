#include "affcox/affcox.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "affcox/commands.hpp"

struct affcox_group {
  std::shared_ptr<const affcox::AffineWeylGroup> g;
};

struct affcox_element {
  std::shared_ptr<const affcox::AffineWeylGroup> g;
  affcox::AffineElement x;
};

namespace {

thread_local std::string last_error;

affcox_status fail(affcox_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
affcox_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const affcox::BudgetExceeded& e) {
    return fail(AFFCOX_BUDGET_EXCEEDED, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(AFFCOX_PARSE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AFFCOX_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AFFCOX_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(AFFCOX_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(AFFCOX_INTERNAL_ERROR, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

affcox_status same_group(const affcox_element* a, const affcox_element* b) {
  if (a->g->tag() != b->g->tag() || a->g->root_system().cartan() != b->g->root_system().cartan())
    return fail(AFFCOX_INVALID_ARGUMENT, "elements belong to different groups");
  return AFFCOX_OK;
}

affcox_element* wrap(const affcox_element* like, affcox::AffineElement x) { return new affcox_element{like->g, std::move(x)}; }

affcox::CommandOptions to_options(const affcox_run_options* o) {
  affcox::CommandOptions c;
  if (o->type) c.type = o->type;
  c.rank = o->rank;
  if (o->twist) c.twist = o->twist;
  if (o->delta_pow >= 0) c.delta_pow = o->delta_pow;
  if (o->tau) c.tau = o->tau;
  if (o->rep) c.rep = o->rep;
  c.conjugates = o->conjugates;
  c.conj_length = o->conj_length;
  c.seed = o->seed;
  c.node_budget = static_cast<std::size_t>(o->node_budget);
  c.edges = o->edges != 0;
  c.max_rank = o->max_rank;
  if (o->fixture) c.fixture = o->fixture;
  c.write_fixture = o->write_fixture != 0;
  c.cross_check = o->cross_check != 0;
  return c;
}

template <class Run>
affcox_status run_command(Run run, const affcox_run_options* opts, affcox_format format, char** report, int* all_passed) {
  if (!opts || !report || !all_passed) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const affcox::CommandResult r = run(to_options(opts));
    *report = dup_string(format == AFFCOX_FORMAT_JSON ? r.json.dump(2) + "\n" : r.text);
    *all_passed = r.all_passed ? 1 : 0;
    if (r.partial) return fail(AFFCOX_BUDGET_EXCEEDED, "node budget exhausted; report is partial");
    return AFFCOX_OK;
  });
}

}  // namespace

extern "C" {

const char* affcox_version(void) { return "0.1.0"; }

const char* affcox_last_error_message(void) { return last_error.c_str(); }

const char* affcox_status_string(affcox_status status) {
  switch (status) {
    case AFFCOX_OK: return "ok";
    case AFFCOX_NULL_ARGUMENT: return "null argument";
    case AFFCOX_INVALID_ARGUMENT: return "invalid argument";
    case AFFCOX_PARSE_ERROR: return "parse error";
    case AFFCOX_BUDGET_EXCEEDED: return "node budget exceeded";
    case AFFCOX_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void affcox_string_free(char* s) { std::free(s); }

affcox_status affcox_group_create(char type_letter, int rank, const char* twist, affcox_group** out) {
  if (!out) return fail(AFFCOX_NULL_ARGUMENT, "out is null");
  return guarded([&] {
    auto g = std::make_shared<const affcox::AffineWeylGroup>(type_letter, rank, twist ? twist : "id");
    *out = new affcox_group{std::move(g)};
    return AFFCOX_OK;
  });
}

void affcox_group_destroy(affcox_group* g) { delete g; }

affcox_status affcox_group_rank(const affcox_group* g, int* out) {
  if (!g || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  *out = g->g->rank();
  return AFFCOX_OK;
}

affcox_status affcox_group_describe_json(const affcox_group* g, char** out) {
  if (!g || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    affcox::Json j = affcox::group_to_json(*g->g);
    j["root_system"] = affcox::root_system_to_json(g->g->root_system());
    *out = dup_string(j.dump(2));
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_parse(const affcox_group* g, const char* text, affcox_element** out) {
  if (!g || !text || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  try {
    last_error.clear();
    *out = new affcox_element{g->g, g->g->parse(text)};
    return AFFCOX_OK;
  } catch (const std::invalid_argument& e) {
    return fail(AFFCOX_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(AFFCOX_INTERNAL_ERROR, e.what());
  }
}

void affcox_element_destroy(affcox_element* x) { delete x; }

affcox_status affcox_element_multiply(const affcox_element* a, const affcox_element* b, affcox_element** out) {
  if (!a || !b || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  if (const affcox_status s = same_group(a, b); s != AFFCOX_OK) return s;
  return guarded([&] {
    *out = wrap(a, a->g->multiply(a->x, b->x));
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_inverse(const affcox_element* x, affcox_element** out) {
  if (!x || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap(x, x->g->inverse(x->x));
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_power(const affcox_element* x, uint64_t n, affcox_element** out) {
  if (!x || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap(x, x->g->power(x->x, n));
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_length(const affcox_element* x, int* out) {
  if (!x || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = x->g->length(x->x);
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_equal(const affcox_element* a, const affcox_element* b, int* out) {
  if (!a || !b || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  if (const affcox_status s = same_group(a, b); s != AFFCOX_OK) return s;
  *out = a->x == b->x ? 1 : 0;
  return AFFCOX_OK;
}

affcox_status affcox_element_to_text(const affcox_element* x, char** out) {
  if (!x || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(x->g->to_text(x->x));
    return AFFCOX_OK;
  });
}

affcox_status affcox_element_to_json(const affcox_element* x, char** out) {
  if (!x || !out) return fail(AFFCOX_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(affcox::element_to_json(*x->g, x->x).dump());
    return AFFCOX_OK;
  });
}

void affcox_run_options_init(affcox_run_options* opts) {
  if (!opts) return;
  const affcox::CommandOptions d;
  *opts = affcox_run_options{};
  opts->delta_pow = -1;
  opts->conjugates = d.conjugates;
  opts->conj_length = d.conj_length;
  opts->seed = d.seed;
  opts->max_rank = d.max_rank;
}

affcox_status affcox_run_verify(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed) {
  return run_command(affcox::run_verify, opts, format, report, all_passed);
}

affcox_status affcox_run_min_elements(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed) {
  return run_command(affcox::run_min_elements, opts, format, report, all_passed);
}

affcox_status affcox_run_tables(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed) {
  return run_command(affcox::run_tables, opts, format, report, all_passed);
}

affcox_status affcox_run_classify(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed) {
  return run_command(affcox::run_classify, opts, format, report, all_passed);
}

}  // extern "C"
