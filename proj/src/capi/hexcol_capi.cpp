#include "hexcol/hexcol.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "complex/fixtures.hpp"
#include "complex/io.hpp"
#include "hexagon/hexagon.hpp"
#include "report/report.hpp"

struct hexcol_field {
  hexcol::Field value;
};

struct hexcol_complex {
  hexcol::Triangulation value;
};

namespace {

thread_local std::string last_error;

hexcol_status fail(hexcol_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f, mapping library exceptions to status codes.
template <class F>
hexcol_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const hexcol::ResourceError& e) {
    return fail(HEXCOL_RESOURCE_ERROR, e.what());
  } catch (const hexcol::InputError& e) {
    return fail(HEXCOL_INPUT_ERROR, e.what());
  } catch (const hexcol::DomainError& e) {
    return fail(HEXCOL_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HEXCOL_RESOURCE_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HEXCOL_INTERNAL_ERROR, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hexcol::RunConfig config(const char* command, const hexcol_options* opts, const char* manifold) {
  hexcol_options o;
  hexcol_options_default(&o);
  if (opts) o = *opts;
  if (o.max_extension < 1 || o.trials < 0 || o.enumeration_cap == 0 || o.search_cap == 0)
    throw hexcol::InputError("caps must be positive");
  hexcol::RunConfig c;
  c.command = command;
  c.manifold = manifold ? manifold : "";
  c.seed = o.seed;
  c.max_extension = o.max_extension;
  c.enumeration_cap = o.enumeration_cap;
  c.search_cap = static_cast<std::size_t>(o.search_cap);
  c.trials = o.trials;
  return c;
}

hexcol_status emit(const hexcol::Json& j, char** out) {
  *out = copy_out(j.dump(2));
  return j.contains("pass") && !j["pass"].get<bool>() ? HEXCOL_VERIFY_FAILED : HEXCOL_OK;
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (auto p : ptrs)
    if (!p) return true;
  return false;
}

hexcol_status null_error() { return fail(HEXCOL_INPUT_ERROR, "null argument"); }

}  // namespace

extern "C" {

const char* hexcol_version(void) { return HEXCOL_VERSION; }

const char* hexcol_last_error(void) { return last_error.c_str(); }

void hexcol_string_free(char* s) { std::free(s); }

void hexcol_options_default(hexcol_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->enumeration_cap = uint64_t{1} << 20;
  opts->search_cap = 200000;
  opts->max_extension = 2;
  opts->trials = 100;
}

hexcol_status hexcol_field_create(const char* spec, hexcol_field** out) {
  if (null_args({spec, out})) return null_error();
  return guarded([&] {
    *out = new hexcol_field{hexcol::Field::parse(spec)};
    return HEXCOL_OK;
  });
}

void hexcol_field_free(hexcol_field* f) { delete f; }

hexcol_status hexcol_complex_fixture(const char* name, hexcol_complex** out) {
  if (null_args({name, out})) return null_error();
  return guarded([&] {
    *out = new hexcol_complex{hexcol::fixture(name)};
    return HEXCOL_OK;
  });
}

hexcol_status hexcol_complex_load(const char* path, hexcol_complex** out) {
  if (null_args({path, out})) return null_error();
  return guarded([&] {
    *out = new hexcol_complex{hexcol::load_triangulation(path)};
    return HEXCOL_OK;
  });
}

hexcol_status hexcol_complex_parse(const char* document, hexcol_complex** out) {
  if (null_args({document, out})) return null_error();
  return guarded([&] {
    *out = new hexcol_complex{hexcol::parse_triangulation(document)};
    return HEXCOL_OK;
  });
}

hexcol_status hexcol_complex_product(const hexcol_complex* a, const hexcol_complex* b, hexcol_complex** out) {
  if (null_args({a, b, out})) return null_error();
  return guarded([&] {
    *out = new hexcol_complex{hexcol::staircase_product(a->value, b->value)};
    return HEXCOL_OK;
  });
}

void hexcol_complex_free(hexcol_complex* k) { delete k; }

hexcol_status hexcol_complex_serialize(const hexcol_complex* k, const char* format, char** out) {
  if (null_args({k, format, out})) return null_error();
  return guarded([&] {
    const std::string f = format;
    if (f == "text") {
      *out = copy_out(hexcol::serialize_text(k->value));
    } else if (f == "json") {
      *out = copy_out(hexcol::serialize_json(k->value));
    } else {
      throw hexcol::InputError("unknown format '" + f + "' (text, json)");
    }
    return HEXCOL_OK;
  });
}

int32_t hexcol_complex_dim(const hexcol_complex* k) { return k ? k->value.dim() : -1; }

int64_t hexcol_complex_count(const hexcol_complex* k, int32_t n) {
  if (!k || n < 0 || n > k->value.dim()) return -1;
  return static_cast<int64_t>(k->value.count(n));
}

hexcol_status hexcol_fixtures_list(char** json) {
  if (null_args({json})) return null_error();
  return guarded([&] { return emit(hexcol::fixtures_report(), json); });
}

hexcol_status hexcol_homology_report(const hexcol_complex* k, const hexcol_field* f, const hexcol_options* opts,
                                     const char* manifold, char** json) {
  if (null_args({k, f, json})) return null_error();
  return guarded([&] { return emit(hexcol::homology_report(config("homology", opts, manifold), k->value, f->value), json); });
}

hexcol_status hexcol_invariants_report(const hexcol_complex* k, const hexcol_field* f, const char* cocycles,
                                       const hexcol_options* opts, const char* manifold, char** json) {
  if (null_args({k, f, cocycles, json})) return null_error();
  return guarded([&] {
    std::vector<std::string> list;
    std::string cur;
    auto flush = [&] {
      const auto b = cur.find_first_not_of(" \t\r");
      if (b != std::string::npos) list.push_back(cur.substr(b, cur.find_last_not_of(" \t\r") - b + 1));
      cur.clear();
    };
    for (const char* p = cocycles; *p; ++p) {
      if (*p == ',' || *p == '\n') {
        flush();
      } else {
        cur += *p;
      }
    }
    flush();
    if (list.empty()) {
      // every builtin that is defined over this field
      for (const auto& name : hexcol::builtin_cocycle_names()) {
        try {
          hexcol::builtin_cocycle(name, f->value);
          list.push_back(name);
        } catch (const hexcol::DomainError&) {
        }
      }
    }
    return emit(hexcol::invariants_report(config("invariants", opts, manifold), k->value, f->value, list), json);
  });
}

hexcol_status hexcol_search_report(int32_t level, int32_t degree, const char* kind, const hexcol_field* f,
                                   const hexcol_options* opts, char** json) {
  if (null_args({kind, f, json})) return null_error();
  return guarded([&] {
    if (degree < 0) throw hexcol::InputError("degree must be nonnegative");
    return emit(hexcol::search_report(config("search", opts, nullptr), level, static_cast<unsigned>(degree),
                                      hexcol::parse_kind(kind), f->value),
                json);
  });
}

hexcol_status hexcol_verify_report(const char* suite, const hexcol_complex* k, const hexcol_field* f,
                                   const hexcol_options* opts, const char* manifold, char** json) {
  if (null_args({suite, f, json})) return null_error();
  return guarded([&] {
    return emit(hexcol::verify_report(config("verify", opts, manifold), suite, f->value, k ? &k->value : nullptr),
                json);
  });
}

hexcol_status hexcol_limit_check_report(const hexcol_field* f, const hexcol_options* opts, char** json) {
  if (null_args({f, json})) return null_error();
  return guarded([&] { return emit(hexcol::limit_check_report(config("limit-check", opts, nullptr), f->value), json); });
}

}  // extern "C"
