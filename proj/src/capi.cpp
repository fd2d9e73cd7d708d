#include "plethysm/plethysm_c.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "plethysm/runner.hpp"

struct plethysm_fixture {
  plethysm::Fixture fx;
};

namespace {
  thread_local std::string last_error;

  template <class F>
  int guarded(F&& f) {
    try {
      last_error.clear();
      f();
      return PLETHYSM_OK;
    } catch (plethysm::Error const& e) {
      last_error = e.what();
      return static_cast<int>(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return PLETHYSM_SIZE_CAP;
    } catch (std::exception const& e) {
      last_error = e.what();
      return PLETHYSM_INTERNAL;
    }
  }

  char* dup(std::string const& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) {
      throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
  }

  plethysm::RunOptions to_options(plethysm_options const* o) {
    plethysm_options d;
    plethysm_options_default(&d);
    if (!o) {
      o = &d;
    }
    plethysm::RunOptions r;
    r.cap          = o->cap;
    r.nmax         = o->nmax;
    r.isolated_cap = o->isolated_cap;
    r.target       = o->target_vect ? plethysm::Flavor::vect : plethysm::Flavor::set;
    r.variant      = o->variant_nd ? plethysm::CospanVariant::nd : plethysm::CospanVariant::full;
    r.seed         = o->seed;
    r.summary      = o->summary != 0;
    return r;
  }

  void need(bool cond, char const* what) {
    plethysm::require(cond, plethysm::ErrorCode::invalid_argument, what);
  }
}  // namespace

extern "C" {

void plethysm_options_default(plethysm_options* o) {
  if (!o) {
    return;
  }
  plethysm::RunOptions r;
  o->cap          = r.cap;
  o->nmax         = r.nmax;
  o->isolated_cap = r.isolated_cap;
  o->target_vect  = 0;
  o->variant_nd   = 0;
  o->seed         = r.seed;
  o->summary      = 0;
}

const char* plethysm_version(void) {
  return "0.1.0";
}

const char* plethysm_last_error(void) {
  return last_error.c_str();
}

void plethysm_string_free(char* s) {
  std::free(s);
}

int plethysm_fixture_parse(const char* text, plethysm_fixture** out) {
  return guarded([&] {
    need(text && out, "null argument");
    *out = new plethysm_fixture{plethysm::parse_fixture(text)};
  });
}

int plethysm_fixture_load(const char* path, plethysm_fixture** out) {
  return guarded([&] {
    need(path && out, "null argument");
    *out = new plethysm_fixture{plethysm::load_fixture(path)};
  });
}

int plethysm_fixture_zoo(const char* name, const plethysm_options* o, plethysm_fixture** out) {
  return guarded([&] {
    need(name && out, "null argument");
    *out = new plethysm_fixture{plethysm::zoo_fixture(name, to_options(o))};
  });
}

void plethysm_fixture_free(plethysm_fixture* f) {
  delete f;
}

int plethysm_fixture_emit(const plethysm_fixture* f, char** out) {
  return guarded([&] {
    need(f && out, "null argument");
    *out = dup(plethysm::emit_fixture(f->fx));
  });
}

int plethysm_fixture_shape(const plethysm_fixture* f, size_t* objects, size_t* morphisms) {
  return guarded([&] {
    need(f && objects && morphisms, "null argument");
    *objects   = f->fx.action->num_objects();
    *morphisms = f->fx.action->num_morphisms();
  });
}

int plethysm_fixture_value_size(const plethysm_fixture* f, int a, int b, size_t* out) {
  return guarded([&] {
    need(f && out, "null argument");
    int n = static_cast<int>(f->fx.action->num_objects());
    need(a >= 0 && b >= 0 && a < n && b < n, "object index out of range");
    *out = f->fx.bimodule ? f->fx.bimodule->value(a, b).size() : 0;
  });
}

int plethysm_fixture_check(const plethysm_fixture* f,
                           const char*             suite,
                           const plethysm_options* o,
                           int*                    lawful) {
  return guarded([&] {
    need(f && suite && lawful, "null argument");
    auto r  = plethysm::run_command("check", {suite, "-"}, to_options(o),
                                    plethysm::emit_fixture(f->fx));
    *lawful = r.status == 0;
  });
}

int plethysm_run(const char*             command,
                 const char* const*      args,
                 int                     nargs,
                 const char*             stdin_text,
                 const plethysm_options* o,
                 char**                  report,
                 int*                    status) {
  return guarded([&] {
    need(command && report && status && (nargs == 0 || args), "null argument");
    std::vector<std::string> a;
    for (int i = 0; i < nargs; ++i) {
      need(args[i] != nullptr, "null argument");
      a.emplace_back(args[i]);
    }
    auto r  = plethysm::run_command(command, a, to_options(o), stdin_text ? stdin_text : "");
    *report = dup(r.report);
    *status = r.status;
  });
}

}  // extern "C"
