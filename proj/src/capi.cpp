#include "c2charge.h"

#include "c2charge/charge.hpp"
#include "c2charge/render.hpp"

#include <cstring>
#include <memory>
#include <new>

struct c2c_crystal {
  c2c::Crystal crystal;
  c2c::Decomposition dec;
  c2c::ChargeContext ctx;
  explicit c2c_crystal(c2c::Weight lam) : crystal(lam), dec(crystal), ctx(dec) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
c2c_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return C2C_EINVAL;
  } catch (const std::bad_alloc&) {
    return C2C_EINTERNAL;
  } catch (const std::exception&) {
    return C2C_EINTERNAL;
  }
}

c2c_status check_index(const c2c_crystal* cr, long long idx) {
  if (!cr) return C2C_EINVAL;
  if (idx < 0 || idx >= static_cast<long long>(cr->crystal.size())) return C2C_ERANGE;
  return C2C_OK;
}

bool known_format(const char* f) {
  std::string s = f;
  return s == "json" || s == "csv" || s == "text";
}

}  // namespace

extern "C" {

const char* c2c_status_name(c2c_status s) {
  switch (s) {
    case C2C_OK: return "ok";
    case C2C_EINVAL: return "invalid argument";
    case C2C_EDOMAIN: return "undefined in this domain";
    case C2C_ERANGE: return "index out of range";
    case C2C_EFORMAT: return "unknown format";
    case C2C_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

c2c_status c2c_crystal_create(long long l1, long long l2, c2c_crystal** out) {
  if (!out) return C2C_EINVAL;
  return guarded([&] {
    if (!c2c::is_dominant({l1, l2})) return C2C_EINVAL;
    *out = new c2c_crystal(c2c::Weight{l1, l2});
    return C2C_OK;
  });
}

void c2c_crystal_free(c2c_crystal* cr) { delete cr; }

long long c2c_crystal_size(const c2c_crystal* cr) {
  return cr ? static_cast<long long>(cr->crystal.size()) : 0;
}

c2c_status c2c_crystal_element(const c2c_crystal* cr, long long idx, long long str2_out[4],
                               long long weight_out[2]) {
  if (c2c_status s = check_index(cr, idx); s != C2C_OK) return s;
  if (!str2_out || !weight_out) return C2C_EINVAL;
  c2c::Element el = cr->crystal.element(static_cast<size_t>(idx));
  str2_out[0] = el.s.a;
  str2_out[1] = el.s.b;
  str2_out[2] = el.s.c;
  str2_out[3] = el.s.d;
  c2c::Weight mu = c2c::weight(el);
  weight_out[0] = mu.l1;
  weight_out[1] = mu.l2;
  return C2C_OK;
}

c2c_status c2c_element_stats(const c2c_crystal* cr, long long idx, long long eps_out[3],
                             long long phi_out[3]) {
  if (c2c_status s = check_index(cr, idx); s != C2C_OK) return s;
  if (!eps_out || !phi_out) return C2C_EINVAL;
  return guarded([&] {
    c2c::Element el = cr->crystal.element(static_cast<size_t>(idx));
    eps_out[0] = c2c::eps1(el);
    eps_out[1] = c2c::eps2(el);
    eps_out[2] = c2c::eps12(el);
    phi_out[0] = c2c::phi1(el);
    phi_out[1] = c2c::phi2(el);
    phi_out[2] = c2c::phi12(el);
    return C2C_OK;
  });
}

c2c_status c2c_element_decomp(const c2c_crystal* cr, long long idx, long long* pat_out,
                              long long* at_out, long long zeta_out[2]) {
  if (c2c_status s = check_index(cr, idx); s != C2C_OK) return s;
  if (!pat_out || !at_out || !zeta_out) return C2C_EINVAL;
  size_t i = static_cast<size_t>(idx);
  *pat_out = cr->dec.pat(i);
  *at_out = cr->dec.at(i);
  zeta_out[0] = cr->dec.zeta(i).l1;
  zeta_out[1] = cr->dec.zeta(i).l2;
  return C2C_OK;
}

c2c_status c2c_element_charge(const c2c_crystal* cr, long long idx, long long* charge_out) {
  if (c2c_status s = check_index(cr, idx); s != C2C_OK) return s;
  if (!charge_out) return C2C_EINVAL;
  size_t i = static_cast<size_t>(idx);
  if (!c2c::is_dominant(c2c::weight(cr->crystal.element(i)))) return C2C_EDOMAIN;
  return guarded([&] {
    *charge_out = cr->ctx.charge_atomic(i);
    return C2C_OK;
  });
}

long long c2c_weyl_dim(long long l1, long long l2) {
  if (!c2c::is_dominant({l1, l2})) return 0;
  return c2c::weyl_dim({l1, l2});
}

c2c_status c2c_kostka_oracle(long long l1, long long l2, long long m1, long long m2,
                             char** poly_out) {
  if (!poly_out) return C2C_EINVAL;
  return guarded([&] {
    *poly_out = dup_string(c2c::kostka_foulkes({l1, l2}, {m1, m2}).str("q"));
    return C2C_OK;
  });
}

c2c_status c2c_kostka_charge(long long l1, long long l2, long long m1, long long m2,
                             char** poly_out) {
  if (!poly_out) return C2C_EINVAL;
  return guarded([&] {
    c2c_crystal cr(c2c::Weight{l1, l2});
    *poly_out = dup_string(cr.ctx.kostka_via_charge({m1, m2}).str("q"));
    return C2C_OK;
  });
}

c2c_status c2c_render_crystal(long long l1, long long l2, const char* format, char** out) {
  if (!format || !out) return C2C_EINVAL;
  if (!known_format(format)) return C2C_EFORMAT;
  return guarded([&] {
    std::string text = c2c::render_crystal({l1, l2}, format);
    *out = dup_string(text);
    return C2C_OK;
  });
}

c2c_status c2c_render_decompose(long long l1, long long l2, const char* format, char** out) {
  if (!format || !out) return C2C_EINVAL;
  if (!known_format(format)) return C2C_EFORMAT;
  return guarded([&] {
    *out = dup_string(c2c::render_decompose({l1, l2}, format));
    return C2C_OK;
  });
}

c2c_status c2c_render_kostka(long long l1, long long l2, const char* format, int have_mu,
                             long long m1, long long m2, char** out, int* all_match_out) {
  if (!format || !out || !all_match_out) return C2C_EINVAL;
  if (!known_format(format)) return C2C_EFORMAT;
  return guarded([&] {
    std::optional<c2c::Weight> mu;
    if (have_mu) mu = c2c::Weight{m1, m2};
    c2c::RenderResult r = c2c::render_kostka({l1, l2}, mu, format);
    *out = dup_string(r.text);
    *all_match_out = r.ok ? 1 : 0;
    return C2C_OK;
  });
}

c2c_status c2c_render_graph(long long l1, long long l2, long long m, char** out) {
  if (!out) return C2C_EINVAL;
  return guarded([&] {
    std::optional<long long> twist;
    if (m >= 0) twist = m;
    *out = dup_string(c2c::render_graph({l1, l2}, twist));
    return C2C_OK;
  });
}

c2c_status c2c_render_verify(long long bound, long long jobs, const char* format, char** out,
                             int* all_passed_out) {
  if (!format || !out || !all_passed_out) return C2C_EINVAL;
  if (!known_format(format)) return C2C_EFORMAT;
  return guarded([&] {
    c2c::RenderResult r = c2c::render_verify(bound, jobs, format);
    *out = dup_string(r.text);
    *all_passed_out = r.ok ? 1 : 0;
    return C2C_OK;
  });
}

void c2c_free_string(char* s) { delete[] s; }

}  // extern "C"
