#include "trigonal/trigonal.h"

#include "trigonal/errors.hpp"
#include "trigonal/hurwitz.hpp"
#include "trigonal/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct trg_table {
  trigonal::HodgeTable table;
};

namespace {

thread_local std::string last_error;

trg_status fail(trg_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
trg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const trigonal::InvalidLabel& e) {
    return fail(TRG_ERR_INVALID_LABEL, e.what());
  } catch (const trigonal::InvalidArgument& e) {
    return fail(TRG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const trigonal::SingularSystem& e) {
    return fail(TRG_ERR_SINGULAR_SYSTEM, e.what());
  } catch (const trigonal::InconsistentSystem& e) {
    return fail(TRG_ERR_INCONSISTENT_SYSTEM, e.what());
  } catch (const trigonal::DegreeOverflow& e) {
    return fail(TRG_ERR_DEGREE_OVERFLOW, e.what());
  } catch (const trigonal::OrderMismatch& e) {
    return fail(TRG_ERR_ORDER_MISMATCH, e.what());
  } catch (const trigonal::ArithmeticError& e) {
    return fail(TRG_ERR_ARITHMETIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TRG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TRG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TRG_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

trigonal::Format to_format(trg_format f) {
  switch (f) {
    case TRG_FORMAT_TEXT:
      return trigonal::Format::Text;
    case TRG_FORMAT_JSON:
      return trigonal::Format::Json;
    case TRG_FORMAT_CSV:
      return trigonal::Format::Csv;
  }
  throw trigonal::InvalidArgument("unknown output format " + std::to_string(static_cast<int>(f)));
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw trigonal::InvalidArgument(std::string(what) + " must not be null");
  }
}

trg_status emit(const trigonal::Rendered& r, char** out, int* all_pass) {
  *out = copy_out(r.body);
  if (all_pass != nullptr) {
    *all_pass = r.all_pass ? 1 : 0;
  }
  return TRG_OK;
}

}  // namespace

extern "C" {

const char* trg_version(void) { return "1.0.0"; }

const char* trg_last_error(void) { return last_error.c_str(); }

const char* trg_status_name(trg_status status) {
  switch (status) {
    case TRG_OK:
      return "ok";
    case TRG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TRG_ERR_ARITHMETIC:
      return "arithmetic error";
    case TRG_ERR_SINGULAR_SYSTEM:
      return "singular system";
    case TRG_ERR_INCONSISTENT_SYSTEM:
      return "inconsistent system";
    case TRG_ERR_INVALID_LABEL:
      return "invalid label";
    case TRG_ERR_DEGREE_OVERFLOW:
      return "degree overflow";
    case TRG_ERR_ORDER_MISMATCH:
      return "order mismatch";
    case TRG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void trg_string_free(char* s) { std::free(s); }

trg_status trg_table_create(int max_genus, trg_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = new trg_table{trigonal::HodgeTable::build(max_genus)};
    return TRG_OK;
  });
}

void trg_table_destroy(trg_table* table) { delete table; }

trg_status trg_table_max_genus(const trg_table* table, int* out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = table->table.max_genus();
    return TRG_OK;
  });
}

trg_status trg_table_value(const trg_table* table, const char* quantity, int genus, char** out) {
  return guarded([&] {
    require(table, "table");
    require(quantity, "quantity");
    require(out, "out");
    const auto& t = table->table;
    const std::string q(quantity);
    std::string value;
    if (q == "B") {
      value = t.B(genus).to_string();
    } else if (q == "Abullet") {
      value = t.Abullet(genus).to_string();
    } else if (q == "A") {
      value = t.A(genus).to_string();
    } else if (q == "gamma") {
      value = t.gamma(genus).get_str();
    } else if (q == "delta") {
      value = t.delta(genus).get_str();
    } else {
      throw trigonal::InvalidArgument("unknown quantity '" + q + "'");
    }
    *out = copy_out(value);
    return TRG_OK;
  });
}

trg_status trg_table_component(const trg_table* table, int genus, int l, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = copy_out(table->table.component(genus, l).to_string());
    return TRG_OK;
  });
}

trg_status trg_table_export(const trg_table* table, trg_format format, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    return emit(trigonal::render_table(table->table, to_format(format)), out, nullptr);
  });
}

trg_status trg_components(const trg_table* table, int genus, trg_format format, char** out, int* all_pass) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    return emit(trigonal::render_components(table->table, genus, to_format(format)), out, all_pass);
  });
}

trg_status trg_verify_recursions(const trg_table* table, trg_format format, char** out, int* all_pass) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    return emit(trigonal::render_recursions(table->table, to_format(format)), out, all_pass);
  });
}

trg_status trg_verify_theta(int order, trg_format format, char** out, int* all_pass) {
  return guarded([&] {
    require(out, "out");
    return emit(trigonal::render_theta(order, to_format(format)), out, all_pass);
  });
}

trg_status trg_verify_crc(const trg_table* table, int order, trg_format format, char** out, int* all_pass) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    const auto report = trigonal::verify_crc(order, table->table);
    return emit(trigonal::render_crc(report, to_format(format)), out, all_pass);
  });
}

trg_status trg_localization(trg_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    return emit(trigonal::render_localization(to_format(format)), out, nullptr);
  });
}

trg_status trg_duval(int n, trg_format format, char** out, int* all_pass) {
  return guarded([&] {
    require(out, "out");
    return emit(trigonal::render_duval(n, to_format(format)), out, all_pass);
  });
}

}  // extern "C"
