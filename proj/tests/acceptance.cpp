// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance <path to vbpb cli> <fixture dir>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"

using namespace vbpb;

namespace {

// Counts per law, first witness kept.
struct Tally {
  long n = 0, bad = 0;
  std::string first;
};

struct Criterion {
  std::map<std::string, Tally> laws;
  std::vector<std::string> notes;
  long need = 0;  // minimum count per law, 0 for no minimum

  void check(const std::string& law, bool ok, const std::string& why = "") {
    Tally& t = laws[law];
    ++t.n;
    if (!ok && t.bad++ == 0) t.first = why;
  }
  // Library errors count as failures of the law being exercised.
  void guard(const std::string& law, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(law, false, e.what());
    }
  }
  void absorb(const Report& r, const std::string& prefix) {
    for (auto& rec : r.records) {
      std::string why;
      for (auto& [k, v] : rec.witness) why += k + "=" + v + " ";
      check(prefix + rec.check, rec.pass, rec.instance + " trial " + std::to_string(rec.trial) + ": " + why);
    }
  }
  bool ok(std::string& detail) const {
    bool good = true;
    long total = 0;
    for (auto& [name, t] : laws) {
      total += t.n;
      if (t.bad) {
        good = false;
        detail += " " + name + " failed " + std::to_string(t.bad) + "/" + std::to_string(t.n) + " (" + t.first + ")";
      } else if (need && t.n < need) {
        good = false;
        detail += " " + name + " only " + std::to_string(t.n) + " samples";
      }
    }
    for (auto& n : notes) {
      good = false;
      detail += " " + n;
    }
    if (good) detail = " " + std::to_string(laws.size()) + " laws, " + std::to_string(total) + " checks";
    return good;
  }
};

Mat I(std::size_t n) { return Mat::identity(n); }

// [[A, J B], [0, B]] assembled directly
Mat block_of(const GL2Element& e) {
  std::size_t l = e.A.rows(), k = e.B.rows();
  return vcat(hcat(e.A, e.J * e.B), hcat(Mat::zero(k, l), e.B));
}

bool member_oracle(const GL2Element& e) {
  std::size_t l = e.A.rows(), k = e.B.rows();
  return rank(e.A) == l && rank(e.B) == k && rank(I(l) + e.J * e.d) == l && rank(I(k) + e.d * e.J) == k;
}

// s20 read off from the block: the moment of Phi M when Phi has moment d.
Mat s20_oracle(const GL2Element& e) {
  std::size_t k = e.B.rows();
  return mat_inv((I(k) + e.d * e.J) * e.B) * e.d * e.A;
}

Mat transpose_inverse(const Mat& m) { return solve_unique(m.transpose(), I(m.rows())); }

// ---- criterion 1 ------------------------------------------------------

void gl2_laws(Criterion& c, std::size_t l, std::size_t k, Rng& r, long n) {
  std::string tag = "(" + std::to_string(l) + "," + std::to_string(k) + ") ";
  for (long t = 0; t < n; ++t) {
    Mat d = rand_mat(r, k, l);
    GL2Element a = rand_gl2_at(r, d, l);
    GL2Element b = rand_gl2_at(r, gl2_s20(a), l);
    GL2Element e = rand_gl2_at(r, gl2_s20(b), l);
    c.check(tag + "member", member_oracle(a) && gl2_member(a) && gl2_t20(a) == d && gl2_s20(a) == s20_oracle(a));

    GL2Element ab = gl2_m20(a, b);
    c.check(tag + "o20 block product", block_of(ab) == block_of(a) * block_of(b) && ab.d == a.d);
    c.check(tag + "o20 s/t", gl2_t20(ab) == gl2_t20(a) && gl2_s20(ab) == gl2_s20(b));
    c.check(tag + "o20 associativity", gl2_m20(ab, e) == gl2_m20(a, gl2_m20(b, e)));
    c.check(tag + "o20 unit", gl2_m20(gl2_u20(d, l), a) == a && gl2_m20(a, gl2_u20(gl2_s20(a), l)) == a);
    GL2Element ai = gl2_i20(a);
    c.check(tag + "o20 inverse", gl2_m20(a, ai) == gl2_u20(d, l) && gl2_m20(ai, a) == gl2_u20(gl2_s20(a), l) &&
                                     block_of(ai) == mat_inv(block_of(a)));

    // vertical: J composes so that I + J d is multiplicative
    GL2Element v1 = rand_gl2_at(r, d, l);
    GL2Element v2 = rand_gl2_with_s21(r, gl2_t21(v1));
    GL2Element v0 = rand_gl2_with_s21(r, gl2_t21(v2));
    GL2Element v21 = gl2_m21(v2, v1);
    c.check(tag + "o21 formula", v21.A == v2.A && v21.B == v1.B &&
                                     I(l) + v21.J * d == (I(l) + v2.J * d) * (I(l) + v1.J * d));
    c.check(tag + "o21 s/t", gl2_t21(v21) == gl2_t21(v2) && gl2_s21(v21) == gl2_s21(v1));
    c.check(tag + "o21 globular", gl2_t20(v1) == gl2_t20(v2) && gl2_s20(v1) == gl2_s20(v2));
    c.check(tag + "o21 associativity", gl2_m21(gl2_m21(v0, v2), v1) == gl2_m21(v0, gl2_m21(v2, v1)));
    c.check(tag + "o21 unit", gl2_m21(gl2_u21(gl2_t21(v1)), v1) == v1 && gl2_m21(v1, gl2_u21(gl2_s21(v1))) == v1);
    GL2Element vi = gl2_i21(v1);
    c.check(tag + "o21 inverse",
            gl2_m21(v1, vi) == gl2_u21(gl2_t21(v1)) && gl2_m21(vi, v1) == gl2_u21(gl2_s21(v1)));

    // interchange: (a2 o20 b2) o21 (a1 o20 b1) = (a2 o21 a1) o20 (b2 o21 b1)
    GL2Element a1 = v1, a2 = v2;
    GL2Element b1 = rand_gl2_at(r, gl2_s20(a1), l);
    GL2Element b2 = rand_gl2_with_s21(r, gl2_t21(b1));
    GL2Element lhs = gl2_m21(gl2_m20(a2, b2), gl2_m20(a1, b1));
    GL2Element rhs = gl2_m20(gl2_m21(a2, a1), gl2_m21(b2, b1));
    c.check(tag + "interchange", lhs == rhs, lhs.str() + " vs " + rhs.str());
  }
}

// ---- criteria 2 and 3 -------------------------------------------------

bool sbis_oracle(const VBGroupoid& v, const SFrame& f) {
  Mat W = f.Phi.cols_range(0, v.l), V = f.Phi.cols_range(v.l, v.k);
  return rank(f.Phi) == v.n() && (v.S[f.g] * W).is_zero() && rank(v.S[f.g] * V) == v.k &&
         rank(v.T[f.g] * V) == v.k;
}

// T W = (T V) d
bool dphi_oracle(const VBGroupoid& v, const SFrame& f, const Mat& d) {
  Mat W = f.Phi.cols_range(0, v.l), V = f.Phi.cols_range(v.l, v.k);
  return v.T[f.g] * W == v.T[f.g] * V * d;
}

void frame_laws(Criterion& c2, Criterion& c3, const std::string& name, const VBGroupoid& v, Rng& r, long n) {
  std::string tag = name + " ";
  for (long t = 0; t < n; ++t) {
    c2.guard(tag + "structure", [&] {
      auto fs = rand_frame_chain(r, v, rand_arrow_chain(r, v.base, 3));
      const SFrame &f1 = fs[0], &f2 = fs[1], &f3 = fs[2];
      c2.check(tag + "frames", sbis_oracle(v, f1) && sbis_oracle(v, f2) && sbis_oracle(v, f3));
      SFrame f12 = frame_bm(v, f1, f2), f23 = frame_bm(v, f2, f3);
      c2.check(tag + "bm frame", sbis_oracle(v, f12) && f12.g == v.base.comp_at(f1.g, f2.g));
      c2.check(tag + "bm ends", frame_bs(v, f12) == frame_bs(v, f2) && frame_bt(v, f12) == frame_bt(v, f1));
      c2.check(tag + "associativity", frame_bm(v, f12, f3) == frame_bm(v, f1, f23));
      BasePair s = frame_bs(v, f1), b = frame_bt(v, f1);
      SFrame us = frame_bu(v, s), ut = frame_bu(v, b);
      c2.check(tag + "bu ends", frame_bs(v, us) == s && frame_bt(v, us) == s && us.g == v.base.unit[s.x]);
      c2.check(tag + "unit law", frame_bm(v, f1, us) == f1 && frame_bm(v, ut, f1) == f1);
      SFrame fi = frame_bi(v, f1);
      c2.check(tag + "bi ends", frame_bs(v, fi) == b && frame_bt(v, fi) == s && fi.g == v.base.inv[f1.g]);
      c2.check(tag + "inverse law", frame_bm(v, f1, fi) == ut && frame_bm(v, fi, f1) == us);
      c2.check(tag + "bi involution", frame_bi(v, fi) == f1);

      Mat d = frame_dphi(v, f1);
      c3.check(tag + "moment oracle", dphi_oracle(v, f1, d) && dphi_oracle(v, f12, frame_dphi(v, f12)));
      c3.check(tag + "d constancy", frame_dphi(v, f2) == d && frame_dphi(v, f12) == d && frame_dphi(v, f3) == d);
      c3.check(tag + "mu bs = mu bt = mu",
               basepair_moment(v, s) == d && basepair_moment(v, b) == d &&
                   basepair_moment(v, frame_bs(v, f12)) == d && basepair_moment(v, frame_bt(v, f12)) == d);
    });
  }
}

// ---- criterion 4 ------------------------------------------------------

void coordinate_laws(Criterion& c, const std::string& name, const VBGroupoid& v, Rng& r, long n) {
  std::string tag = name + " ";
  const std::size_t l = v.l, k = v.k;
  for (long t = 0; t < n; ++t) {
    c.guard(tag + "coordinates", [&] {
      Arrow g = Arrow(r.below(v.base.n_arrows()));
      SFrame a = rand_sframe(r, v, g), b = rand_sframe(r, v, g), f3 = rand_sframe(r, v, g);
      GL2Element e = change_of_coords(v, a, b);
      c.check(tag + "part 1", member_oracle(e) && e.d == frame_dphi(v, a) && s20_oracle(e) == frame_dphi(v, b) &&
                                  a.Phi * block_of(e) == b.Phi);
      c.check(tag + "part 2", gl2_m20(e, change_of_coords(v, b, f3)) == change_of_coords(v, a, f3));

      const Mat &d = e.d, &A = e.A, &J = e.J, &B = e.B;
      Mat C = mat_inv(I(l) + J * d) * A, D = (I(k) + d * J) * B;
      BasePair sa = frame_bs(v, a), sb = frame_bs(v, b), ta = frame_bt(v, a), tb = frame_bt(v, b);
      c.check(tag + "part 3 source", sb.phi_c == sa.phi_c * C && sb.phi_b == sa.phi_b * B);
      c.check(tag + "part 3 target", tb.phi_c == ta.phi_c * A && tb.phi_b == ta.phi_b * D);
      GL1Element cs = change_of_coords_base(v, sa, sb), ct = change_of_coords_base(v, ta, tb);
      c.check(tag + "part 3 closed form", cs.A == C && cs.B == B && ct.A == A && ct.B == D &&
                                              cs == gl2_s21(e) && ct == gl2_t21(e));
      c.check(tag + "part 3 inverse identity", (I(l) - J * mat_inv(I(k) + d * J) * d) * (I(l) + J * d) == I(l));

      auto arrows = rand_arrow_chain(r, v.base, 2);
      auto fs = rand_frame_chain(r, v, arrows);
      SFrame g2 = rand_sframe(r, v, arrows[1]);
      SFrame g1 = rand_sframe_with_bs(r, v, arrows[0], frame_bt(v, g2));
      GL2Element lhs = change_of_coords(v, frame_bm(v, fs[0], fs[1]), frame_bm(v, g1, g2));
      GL2Element rhs = gl2_m21(change_of_coords(v, fs[0], g1), change_of_coords(v, fs[1], g2));
      c.check(tag + "part 4", lhs == rhs, lhs.str() + " vs " + rhs.str());
    });
  }
}

// ---- criterion 5 ------------------------------------------------------

void action_laws(Criterion& c, const std::string& name, const VBGroupoid& v, Rng& r, long n) {
  std::string tag = name + " ";
  for (long t = 0; t < n; ++t) {
    c.guard(tag + "action", [&] {
      auto fs = rand_frame_chain(r, v, rand_arrow_chain(r, v.base, 2));
      Mat d = frame_dphi(v, fs[0]);
      GL2Element e2 = rand_gl2_at(r, d, v.l);
      GL2Element e1 = rand_gl2_with_s21(r, gl2_t21(e2));
      SFrame a1 = act2(v, fs[0], e1), a2 = act2(v, fs[1], e2);
      c.check(tag + "act2 block", a1.Phi == fs[0].Phi * block_of(e1) && sbis_oracle(v, a1));
      c.check(tag + "compatibility", frame_bm(v, a1, a2) == act2(v, frame_bm(v, fs[0], fs[1]), gl2_m21(e1, e2)));
      c.check(tag + "ends", frame_bs(v, a2) == act1(v, frame_bs(v, fs[1]), gl2_s21(e2)) &&
                                frame_bt(v, a2) == act1(v, frame_bt(v, fs[1]), gl2_t21(e2)));
      // unique solvability: Phi is invertible, so Phi X = Phi' has one solution
      SFrame b = rand_sframe(r, v, fs[0].g);
      GL2Element x = change_of_coords(v, fs[0], b);
      c.check(tag + "unique solution", rank(fs[0].Phi) == v.n() && act2(v, fs[0], x) == b);
      // freeness by round trip
      c.check(tag + "freeness", change_of_coords(v, fs[0], a1) == e1 &&
                                    (a1 != fs[0] || e1 == gl2_u20(d, v.l)));
    });
  }
}

// ---- criterion 6 ------------------------------------------------------

Mat fat_base_oracle(const VBGroupoid& v, const FatElement& a, const Mat& e) {
  const Mat& V = a.H.basis();
  return v.T[a.g] * V * mat_inv(v.S[a.g] * V) * e;
}

void fat_laws(Criterion& c, const std::string& name, const VBGroupoid& v, Rng& r, long n) {
  std::string tag = name + " ";
  for (long t = 0; t < n; ++t) {
    c.guard(tag + "F", [&] {
      auto fs = rand_frame_chain(r, v, rand_arrow_chain(r, v.base, 2));
      const SFrame& f = fs[0];
      auto [H, p] = frame_F(v, f);
      c.check(tag + "F then inverse", frame_F_inv(v, H, p) == f);
      Arrow g = Arrow(r.below(v.base.n_arrows()));
      FatElement h = fat_make(v, g, rand_fat_H(r, v, g));
      BasePair q = rand_basepair(r, v, v.base.src[g]);
      auto back = frame_F(v, frame_F_inv(v, h, q));
      c.check(tag + "inverse then F", back.first == h && back.second == q);
      BasePair b = frame_bt(v, f);
      c.check(tag + "bt is the fat action", b.phi_b == fat_act_base(v, H, p.phi_b) &&
                                                b.phi_b == fat_base_oracle(v, H, p.phi_b) &&
                                                b.phi_c == fat_act_core(v, H, p.phi_c));
      FatElement H2 = frame_F(v, fs[1]).first, H12 = fat_compose(v, H, H2);
      c.check(tag + "F is a morphism", frame_F(v, frame_bm(v, fs[0], fs[1])).first == H12);
      Mat eb = rand_mat(r, v.k, 1), ec = rand_mat(r, v.l, 1);
      c.check(tag + "functorial on base",
              fat_act_base(v, H12, eb) == fat_act_base(v, H, fat_act_base(v, H2, eb)) &&
                  fat_act_base(v, fat_unit(v, v.base.src[H2.g]), eb) == eb);
      c.check(tag + "functorial on core",
              fat_act_core(v, H12, ec) == fat_act_core(v, H, fat_act_core(v, H2, ec)) &&
                  fat_act_core(v, fat_unit(v, v.base.src[H2.g]), ec) == ec);
      c.check(tag + "inverse acts inversely", fat_act_base(v, fat_inverse(v, H), fat_act_base(v, H, eb)) == eb);
    });
  }
}

// ---- criterion 7 ------------------------------------------------------

bool tbis_oracle(const VBGroupoid& v, Arrow g, const Mat& Phi) {
  Mat F = Phi.cols_range(0, v.k), L = Phi.cols_range(v.k, v.l);
  return rank(Phi) == v.n() && (v.T[g] * L).is_zero() && rank(v.S[g] * F) == v.k;
}

void duality_laws(Criterion& c, const std::string& name, const VBGroupoid& v, Rng& r, long n) {
  std::string tag = name + " ";
  VBGroupoid dv = vbg_dual(v);
  for (long t = 0; t < n; ++t) {
    c.guard(tag + "duality", [&] {
      SFrame f = rand_sframe(r, v, Arrow(r.below(v.base.n_arrows())));
      TFrame P = frame_psi(v, f);
      c.check(tag + "Psi lands in t-frames", tbis_oracle(v, P.g, P.Phi) && P.g == v.base.inv[f.g]);
      c.check(tag + "Psi Psi = id", frame_psi_inv(v, P) == f && frame_psi(v, frame_psi_inv(v, P)) == P);
      TFrame D = frame_dual(f);
      c.check(tag + "dual frame", D.Phi == transpose_inverse(f.Phi) && tbis_oracle(dv, D.g, D.Phi));
    });
  }
  SuiteOptions opt;
  opt.instance = name;
  opt.seed = 17;
  opt.trials = n;
  c.absorb(suite_duality(v, opt), tag);
}

// ---- criterion 9 ------------------------------------------------------

void crossed_module_laws(Criterion& c, Rng& r, long n) {
  const std::size_t l = 2, k = 1;
  for (int p = 0; p < 3; ++p) {
    Mat d;
    do d = rand_mat(r, k, l);
    while (d.is_zero());
    std::string tag = "d=" + d.str() + " ";
    CrossedModule X = gl2_isotropy_crossed_module(l, k, d);
    for (long t = 0; t < n; ++t) {
      c.guard(tag + "crossed module", [&] {
        Mat J1 = rand_isotropy_J(r, d), J2 = rand_isotropy_J(r, d);
        GL1Element g = rand_isotropy(r, d);
        c.check(tag + "samples", X.in_H(J1) && X.in_H(J2) && X.in_G(g) && mat_inv(g.B) * d * g.A == d);
        c.check(tag + "H product", X.h_mul(J1, J2) == J1 + J2 + J1 * d * J2);
        Mat conj = X.conjugate(g, J1);
        c.check(tag + "action", conj == g.A * J1 * mat_inv(g.B));
        // boundary(g . h) = g boundary(h) g^-1
        GL1Element lhs = X.boundary(conj);
        GL1Element rhs = X.g_mul(X.g_mul(g, X.boundary(J1)), X.g_inv(g));
        c.check(tag + "equivariance", lhs == rhs && lhs.A == g.A * (I(l) + J1 * d) * mat_inv(g.A) &&
                                          lhs.B == g.B * (I(k) + d * J1) * mat_inv(g.B));
        // boundary(h1) . h2 = h1 h2 h1^-1
        Mat pl = X.conjugate(X.boundary(J1), J2);
        Mat pr = X.h_mul(X.h_mul(J1, J2), X.h_inv(J1));
        c.check(tag + "Peiffer", pl == pr, pl.str() + " vs " + pr.str());
      });
    }
  }
}

// ---- criterion 10 -----------------------------------------------------

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void cli_determinism(Criterion& c, const std::string& cli, const std::string& dir) {
  std::vector<std::string> files;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".vbg") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) c.notes.push_back("no fixtures found in " + dir);
  for (auto& f : files) {
    std::string name = std::filesystem::path(f).filename().string();
    std::string cmd = "'" + cli + "' check '" + f + "' --suite all --seed 7 --format machine 2>/dev/null";
    auto a = run(cmd), b = run(cmd);
    c.check(name + " exit 0", a.first == 0 && b.first == 0,
            "exit codes " + std::to_string(a.first) + ", " + std::to_string(b.first));
    c.check(name + " identical", a.second == b.second && !a.second.empty());
  }
}

}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <vbpb cli> <fixture dir>\n";
    return 2;
  }
  const std::string cli = argv[1], fixtures = argv[2];
  auto inst = testing::instances();
  bool all = true;

  auto report = [&](int id, const char* what, Criterion& c, double secs) {
    std::string detail;
    bool ok = c.ok(detail);
    all = all && ok;
    std::printf("criterion %2d %s: %s [%.1fs]%s\n", id, ok ? "PASS" : "FAIL", what, secs, detail.c_str());
    std::fflush(stdout);
  };
  auto timed = [](const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  {
    Criterion c;
    c.need = 500;
    double s = timed([&] {
      Rng r(1001);
      for (auto [l, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 3}})
        gl2_laws(c, l, k, r, 500);
    });
    report(1, "GL(l,k) axioms", c, s);
  }
  {
    Criterion c2, c3;
    c2.need = 200;
    c3.need = 200;
    double s = timed([&] {
      Rng r(1002);
      for (auto& [name, v] : inst) frame_laws(c2, c3, name, v, r, 200);
    });
    report(2, "frame groupoid axioms", c2, s);
    report(3, "d-constancy and moment", c3, s);
  }
  {
    Criterion c;
    c.need = 200;
    double s = timed([&] {
      Rng r(1004);
      for (auto& [name, v] : inst) coordinate_laws(c, name, v, r, 200);
    });
    report(4, "changes of coordinates", c, s);
  }
  {
    Criterion c;
    double s = timed([&] {
      Rng r(1005);
      for (auto& [name, v] : inst) {
        action_laws(c, name, v, r, 100);
        VerifyOptions opt;
        opt.instance = name;
        opt.seed = 5;
        opt.trials = 100;
        SampledPB sp = sample_frames(v, 5, 4);
        c.absorb(verify_2action(v, sp, opt), name + " ");
        c.absorb(principality_check(v, sp, opt), name + " ");
      }
    });
    report(5, "2-action morphism and principality", c, s);
  }
  {
    Criterion c;
    c.need = 200;
    double s = timed([&] {
      Rng r(1006);
      for (auto& [name, v] : inst) fat_laws(c, name, v, r, 200);
    });
    report(6, "F bijection", c, s);
  }
  {
    Criterion c;
    double s = timed([&] {
      Rng r(1007);
      for (auto& [name, v] : inst) {
        duality_laws(c, name, v, r, 200);
        c.check(name + " double dual", vbg_double_dual_check(v).empty());
      }
    });
    // every per-sample law must have seen at least 200 samples
    for (auto& [law, t] : c.laws)
      if (t.n < 200 && law.find("dual.validate") == std::string::npos && law.find("double") == std::string::npos)
        c.notes.push_back(law + " only " + std::to_string(t.n) + " samples");
    report(7, "duality", c, s);
  }
  {
    Criterion c;
    double s = timed([&] {
      for (auto& [name, v] : inst) {
        std::size_t na = v.base.n_arrows();
        std::size_t per = std::max<std::size_t>(4, (200 + na - 1) / na);
        SampledPB sp = sample_frames(v, 8, per);
        AssociatedVB a = associated_vb(v, sp);
        VerifyOptions opt;
        opt.instance = name;
        opt.seed = 8;
        Report cert = certify_associated(v, a, sp, opt, 20);
        c.absorb(cert, name + " ");
        long wd = 0;
        for (auto& rec : cert.records) wd += rec.check == "assoc.well_defined";
        if (wd < 20 * long(na)) c.notes.push_back(name + " has " + std::to_string(wd) + " representative changes");
        c.absorb(roundtrip_frames(v, a, sp, opt), name + " ");
        Rng r(1008);
        for (Arrow g = 0; g < Arrow(na); ++g) {
          c.check(name + " full rank", rank(a.rep_frame[g].Phi) == v.n());
          for (const SFrame& p : sp.frames[g]) {
            SFrame phi = assoc_frame_of(v, a, p);
            GL2Element e = rand_gl2_at(r, frame_dphi(v, p), v.l);
            c.check(name + " evaluation", a.rep_frame[g].Phi * phi.Phi == p.Phi);
            c.check(name + " equivariance", assoc_frame_of(v, a, act2(v, p, e)).Phi == phi.Phi * block_of(e));
          }
        }
      }
    });
    report(8, "1-1 correspondence", c, s);
  }
  {
    Criterion c;
    c.need = 100;
    double s = timed([&] {
      Rng r(1009);
      crossed_module_laws(c, r, 100);
    });
    report(9, "crossed module from isotropy", c, s);
  }
  {
    Criterion c;
    double s = timed([&] { cli_determinism(c, cli, fixtures); });
    report(10, "CLI determinism", c, s);
  }
  return all ? 0 : 1;
}
