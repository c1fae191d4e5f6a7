#include "hp0/hp0.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "hp0/gale_frame.hpp"
#include "hp0/report.hpp"

struct hp0_frame {
  hp0::GaleFrame impl;
};

namespace {

void write_err(char* err, size_t err_len, const std::string& msg) {
  if (!err || err_len == 0) return;
  std::snprintf(err, err_len, "%s", msg.c_str());
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hp0::RunOptions to_options(const hp0_options* opt) {
  hp0::RunOptions o;
  if (opt) {
    o.d_max = opt->d_max;
    o.seed = opt->seed;
    o.paper_degrees = opt->paper_degrees != 0;
    o.threads = opt->threads;
  }
  return o;
}

template <class Fn>
int guarded(char* err, size_t err_len, Fn&& fn) {
  try {
    return fn();
  } catch (const hp0::FrameError& e) {
    write_err(err, err_len, e.what());
    return HP0_ERR_INPUT;
  } catch (const std::invalid_argument& e) {
    write_err(err, err_len, e.what());
    return HP0_ERR_INPUT;
  } catch (const std::exception& e) {
    write_err(err, err_len, e.what());
    return HP0_ERR_INTERNAL;
  }
}

using JsonFn = std::string (*)(const hp0::GaleFrame&, const hp0::RunOptions&);

int run_json(JsonFn fn, const hp0_frame* frame, const hp0_options* opt, char** out_json,
             char* err, size_t err_len) {
  if (!frame || !out_json) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    *out_json = dup_string(fn(frame->impl, to_options(opt)));
    return *out_json ? HP0_OK : HP0_ERR_INTERNAL;
  });
}

}  // namespace

extern "C" {

void hp0_options_init(hp0_options* opt) {
  if (!opt) return;
  opt->d_max = 12;
  opt->seed = 0;
  opt->paper_degrees = 0;
  opt->threads = 0;
}

int hp0_frame_from_file(const char* path, hp0_frame** out, char* err, size_t err_len) {
  if (!path || !out) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    *out = new hp0_frame{hp0::GaleFrame::from_file(path)};
    return HP0_OK;
  });
}

int hp0_frame_parse(const char* text, hp0_frame** out, char* err, size_t err_len) {
  if (!text || !out) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    std::string s(text);
    auto first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && s[first] == '{')
      *out = new hp0_frame{hp0::GaleFrame::parse_json(s)};
    else
      *out = new hp0_frame{hp0::GaleFrame::parse_text(s)};
    return HP0_OK;
  });
}

void hp0_frame_free(hp0_frame* frame) { delete frame; }

int hp0_frame_rows(const hp0_frame* frame) { return frame ? frame->impl.k() : -1; }
int hp0_frame_cols(const hp0_frame* frame) { return frame ? frame->impl.n() : -1; }

int hp0_frame_permute(const hp0_frame* frame, const int* order, int n, hp0_frame** out,
                      char* err, size_t err_len) {
  if (!frame || !order || !out) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    std::vector<int> perm(order, order + n);
    *out = new hp0_frame{frame->impl.permuted(perm)};
    return HP0_OK;
  });
}

int hp0_circuits_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                      char* err, size_t err_len) {
  return run_json(hp0::circuits_json, frame, opt, out_json, err, err_len);
}

int hp0_hilbert_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                     char* err, size_t err_len) {
  return run_json(hp0::hilbert_json, frame, opt, out_json, err, err_len);
}

int hp0_betti_json(const hp0_frame* frame, const hp0_options* opt, char** out_json, char* err,
                   size_t err_len) {
  return run_json(hp0::betti_json, frame, opt, out_json, err, err_len);
}

int hp0_degeneration_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                          char* err, size_t err_len) {
  return run_json(hp0::degeneration_json, frame, opt, out_json, err, err_len);
}

int hp0_fiber_json(const hp0_frame* frame, const hp0_options* opt, const char* lambda_csv,
                   char** out_json, char* err, size_t err_len) {
  if (!frame || !out_json) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    std::vector<std::string> lambda;
    if (lambda_csv && *lambda_csv) {
      std::istringstream in(lambda_csv);
      std::string tok;
      while (std::getline(in, tok, ',')) lambda.push_back(tok);
    }
    *out_json = dup_string(hp0::fiber_json(frame->impl, lambda, to_options(opt)));
    return *out_json ? HP0_OK : HP0_ERR_INTERNAL;
  });
}

int hp0_flats_json(const hp0_frame* frame, const hp0_options* opt, char** out_json, char* err,
                   size_t err_len) {
  return run_json(hp0::flats_json, frame, opt, out_json, err, err_len);
}

int hp0_sheaf_json(const hp0_frame* frame, const hp0_options* opt, char** out_json, char* err,
                   size_t err_len) {
  return run_json(hp0::sheaf_json, frame, opt, out_json, err, err_len);
}

int hp0_report_json(const hp0_frame* frame, const hp0_options* opt, char** out_json, char* err,
                    size_t err_len) {
  if (!frame || !out_json) {
    write_err(err, err_len, "null argument");
    return HP0_ERR_INPUT;
  }
  return guarded(err, err_len, [&]() {
    hp0::ReportResult res = hp0::full_report(frame->impl, to_options(opt));
    *out_json = dup_string(res.json);
    if (!*out_json) return static_cast<int>(HP0_ERR_INTERNAL);
    return static_cast<int>(res.all_ok ? HP0_OK : HP0_ERR_IDENTITY);
  });
}

void hp0_string_free(char* s) { std::free(s); }

const char* hp0_version(void) { return "1.0.0"; }

}  // extern "C"
