#include "vbpb/action.hpp"

namespace vbpb {

SFrame act2(const VBGroupoid& v, const SFrame& f, const GL2Element& e) {
  if (frame_dphi(v, f) != gl2_t20(e))
    throw Error(ErrorKind::MomentMismatch, "act2: d_phi != t20(e)");
  return {f.g, f.Phi * e.block()};
}

BasePair act1(const VBGroupoid& v, const BasePair& p, const GL1Element& f) {
  if (basepair_moment(v, p) != gl1_t10(f))
    throw Error(ErrorKind::MomentMismatch, "act1: moment != t10(f)");
  return {p.x, p.phi_c * f.A, p.phi_b * f.B};
}

GL2Element change_of_coords(const VBGroupoid& v, const SFrame& f1, const SFrame& f2) {
  if (f1.g != f2.g) throw Error(ErrorKind::SameArrowRequired, "change_of_coords: frames sit at different arrows");
  return gl2_from_block(frame_dphi(v, f1), solve_unique(f1.Phi, f2.Phi), v.l);
}

GL1Element change_of_coords_base(const VBGroupoid& v, const BasePair& p1, const BasePair& p2) {
  if (p1.x != p2.x) throw Error(ErrorKind::SameObjectRequired, "change_of_coords_base: pairs sit at different objects");
  return {basepair_moment(v, p1), solve_unique(p1.phi_c, p2.phi_c), solve_unique(p1.phi_b, p2.phi_b)};
}

namespace {

// Runs fn, recording a failure for check when it throws.
template <class Fn>
void guarded(Report& rep, const std::string& check, long trial, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& ex) {
    rep.add_text(check, trial, false, ex.what());
  }
}

Report fresh(const std::string& cmd, const VerifyOptions& opt) {
  Report r;
  r.command = cmd;
  r.instance = opt.instance;
  r.seed = opt.seed;
  return r;
}

bool sample_empty(const SampledPB& sp) {
  for (auto& fs : sp.frames)
    if (!fs.empty()) return false;
  return true;
}

const SFrame& pick_frame(Rng& r, const SampledPB& sp) {
  std::vector<std::size_t> nonempty;
  for (std::size_t g = 0; g < sp.frames.size(); ++g)
    if (!sp.frames[g].empty()) nonempty.push_back(g);
  auto& fs = sp.frames[nonempty[r.below(nonempty.size())]];
  return fs[r.below(fs.size())];
}

Mat I(std::size_t n) { return Mat::identity(n); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

}

Report verify_2action(const VBGroupoid& v, const SampledPB& sp, const VerifyOptions& opt, const Act2Fn& act) {
  Report rep = fresh("verify_2action", opt);
  if (sample_empty(sp)) {
    rep.warnings.push_back("empty frame sample; action checks vacuous");
    return rep;
  }
  Rng rng(opt.seed ^ 0xa5a5a5a5ULL);
  const std::size_t l = v.l, k = v.k;
  for (long t = 0; t < opt.trials; ++t) {
    const SFrame& f = pick_frame(rng, sp);
    Mat d = frame_dphi(v, f);
    GL2Element e = rand_gl2_at(rng, d, l);

    guarded(rep, "moment.bs_bt", t, [&] {
      BasePair s = frame_bs(v, f), b = frame_bt(v, f);
      rep.add("moment.bs_bt", t, basepair_moment(v, s) == d && basepair_moment(v, b) == d,
              {{"d_phi", d}, {"mu_bs", basepair_moment(v, s)}, {"mu_bt", basepair_moment(v, b)}});
    });
    guarded(rep, "action.result", t, [&] {
      SFrame fe = act(v, f, e);
      rep.add("action.sbis", t, frame_is_sbis(v, fe.g, fe.Phi), {{"Phi", fe.Phi}});
      rep.add("moment.equivariance", t, frame_dphi(v, fe) == gl2_s20(e),
              {{"d_after", frame_dphi(v, fe)}, {"s20", gl2_s20(e)}});
      BasePair want_s = act1(v, frame_bs(v, f), gl2_s21(e));
      BasePair want_t = act1(v, frame_bt(v, f), gl2_t21(e));
      BasePair got_s = frame_bs(v, fe), got_t = frame_bt(v, fe);
      rep.add("action.compat_bs", t, got_s == want_s,
              {{"bs_c", got_s.phi_c}, {"want_c", want_s.phi_c}, {"bs_b", got_s.phi_b}, {"want_b", want_s.phi_b}});
      rep.add("action.compat_bt", t, got_t == want_t,
              {{"bt_c", got_t.phi_c}, {"want_c", want_t.phi_c}, {"bt_b", got_t.phi_b}, {"want_b", want_t.phi_b}});
      GL2Element back = change_of_coords(v, f, fe);
      rep.add("action.freeness", t, back == e, {{"J_in", e.J}, {"J_out", back.J}, {"A_in", e.A}, {"A_out", back.A}});
      GL2Element e2 = rand_gl2_at(rng, gl2_s20(e), l);
      SFrame lhs = act(v, fe, e2), rhs = act(v, f, gl2_m20(e, e2));
      rep.add("action.m20", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
    });

    auto arrows = rand_arrow_chain(rng, v.base, 2);
    auto fs = rand_frame_chain(rng, v, arrows);
    Mat dc = frame_dphi(v, fs[0]);
    rep.add("moment.d_constancy", t, dc == frame_dphi(v, fs[1]) && dc == frame_dphi(v, frame_bm(v, fs[0], fs[1])),
            {{"d1", dc}, {"d2", frame_dphi(v, fs[1])}});
    GL2Element e2 = rand_gl2_at(rng, dc, l);
    GL2Element e1 = rand_gl2_with_s21(rng, gl2_t21(e2));
    guarded(rep, "action.morphism", t, [&] {
      SFrame lhs = frame_bm(v, act(v, fs[0], e1), act(v, fs[1], e2));
      SFrame rhs = act(v, frame_bm(v, fs[0], fs[1]), gl2_m21(e1, e2));
      rep.add("action.morphism", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
    });

    // change of coordinates between frames at one arrow
    Arrow g = f.g;
    SFrame a = rand_sframe(rng, v, g), b = rand_sframe(rng, v, g), c = rand_sframe(rng, v, g);
    guarded(rep, "coords.part1", t, [&] {
      GL2Element ab = change_of_coords(v, a, b);
      rep.add("coords.part1", t, gl2_member(ab) && ab.d == frame_dphi(v, a) && gl2_s20(ab) == frame_dphi(v, b),
              {{"d", ab.d}, {"s20", gl2_s20(ab)}, {"d_b", frame_dphi(v, b)}});
      GL2Element bc = change_of_coords(v, b, c), ac = change_of_coords(v, a, c);
      GL2Element comp = gl2_m20(ab, bc);
      rep.add("coords.part2", t, comp == ac, {{"J_ac", ac.J}, {"J_comp", comp.J}});
      GL1Element cs = change_of_coords_base(v, frame_bs(v, a), frame_bs(v, b));
      GL1Element ct = change_of_coords_base(v, frame_bt(v, a), frame_bt(v, b));
      rep.add("coords.part3_s21", t, cs == gl2_s21(ab), {{"C", cs.A}, {"s21_A", gl2_s21(ab).A}});
      rep.add("coords.part3_t21", t, ct == gl2_t21(ab), {{"D", ct.B}, {"t21_B", gl2_t21(ab).B}});
      const Mat& J = ab.J;
      const Mat& dd = ab.d;
      bool closed = cs.A == mat_inv(I(l) + J * dd) * ab.A && cs.B == ab.B && ct.A == ab.A &&
                    ct.B == (I(k) + dd * J) * ab.B;
      rep.add("coords.part3_closed_form", t, closed, {{"C", cs.A}, {"D", ct.B}});
      Mat ident = (I(l) - J * mat_inv(I(k) + dd * J) * dd) * (I(l) + J * dd);
      rep.add("coords.part3_inverse_identity", t, ident == I(l), {{"product", ident}});
    });
    guarded(rep, "coords.part4", t, [&] {
      SFrame f2b = rand_sframe(rng, v, arrows[1]);
      SFrame f1b = rand_sframe_with_bs(rng, v, arrows[0], frame_bt(v, f2b));
      GL2Element lhs = change_of_coords(v, frame_bm(v, fs[0], fs[1]), frame_bm(v, f1b, f2b));
      GL2Element rhs = gl2_m21(change_of_coords(v, fs[0], f1b), change_of_coords(v, fs[1], f2b));
      rep.add("coords.part4", t, lhs == rhs, {{"J_lhs", lhs.J}, {"J_rhs", rhs.J}});
    });
  }
  return rep;
}

Report principality_check(const VBGroupoid& v, const SampledPB& sp, const VerifyOptions& opt) {
  Report rep = fresh("principality_check", opt);
  if (sample_empty(sp)) {
    rep.warnings.push_back("empty frame sample; principality checks vacuous");
    return rep;
  }
  Rng rng(opt.seed ^ 0x5a5a5a5aULL);
  long rejected = 0;
  for (long t = 0; t < opt.trials; ++t) {
    const SFrame& f1 = pick_frame(rng, sp);
    const auto& same = sp.frames[f1.g];
    const SFrame& f2 = same[rng.below(same.size())];
    guarded(rep, "principal.transitive", t, [&] {
      GL2Element e = change_of_coords(v, f1, f2);
      SFrame moved = act2(v, f1, e);
      rep.add("principal.transitive", t, moved == f2, {{"moved", moved.Phi}, {"target", f2.Phi}});
      Mat M = solve_unique(f1.Phi, f2.Phi);
      rep.add("principal.unique", t, M == e.block(), {{"M", M}, {"block", e.block()}});
      GL2Element e2 = rand_gl2_at(rng, e.d, v.l);
      if (e2 != e) rep.add("principal.injective", t, act2(v, f1, e2) != moved, {{"J1", e.J}, {"J2", e2.J}});
    });
    const SFrame& other = pick_frame(rng, sp);
    if (other.g != f1.g) {
      bool ok = false;
      try {
        change_of_coords(v, f1, other);
      } catch (const Error& ex) {
        ok = ex.kind() == ErrorKind::SameArrowRequired;
      }
      ++rejected;
      rep.add_text("principal.cross_arrow_rejected", t, ok, "frames at different arrows were not rejected");
    }
    Object x = f1.g >= 0 ? v.base.src[f1.g] : 0;
    if (sp.basepairs[x].size() >= 1) {
      const auto& ps = sp.basepairs[x];
      const BasePair& p1 = ps[rng.below(ps.size())];
      const BasePair& p2 = ps[rng.below(ps.size())];
      guarded(rep, "principal.base_transitive", t, [&] {
        GL1Element f = change_of_coords_base(v, p1, p2);
        BasePair moved = act1(v, p1, f);
        rep.add("principal.base_transitive", t, moved == p2, {{"phi_c", moved.phi_c}, {"phi_b", moved.phi_b}});
      });
    }
  }
  if (rejected) rep.warnings.push_back(std::to_string(rejected) + " cross-arrow pairs rejected and not counted as fiber pairs");
  return rep;
}

AssociatedVB associated_vb(const VBGroupoid& v, const SampledPB& sp) {
  const auto& G = v.base;
  const std::size_t l = v.l, k = v.k, n = v.n();
  AssociatedVB a;
  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    if (sp.frames[g].empty()) throw Error(ErrorKind::InvalidArgument, "associated_vb: no frame sampled at " + G.arrows[g]);
    a.rep_frame.push_back(sp.frames[g][0]);
  }
  for (Object x = 0; x < G.n_objects(); ++x) {
    if (sp.basepairs[x].empty()) throw Error(ErrorKind::InvalidArgument, "associated_vb: no base pair at " + G.objects[x]);
    a.rep_base.push_back(sp.basepairs[x][0]);
  }
  VBGroupoid& E = a.E;
  E.base = G;
  E.l = l;
  E.k = k;
  E.S.resize(G.n_arrows());
  E.T.resize(G.n_arrows());
  E.Inv.resize(G.n_arrows());
  E.U.resize(G.n_objects());
  E.Mul.resize(v.Mul.size());
  const Mat proj_v = hcat(Mat::zero(k, l), I(k));
  // structure maps of the identity representation R^(l,k)
  const Mat mR = blocks(hcat(I(l), Mat::zero(l, k)), hcat(I(l), Mat::zero(l, k)),
                        hcat(Mat::zero(k, l), Mat::zero(k, k)), hcat(Mat::zero(k, l), I(k)));

  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    const SFrame& f = a.rep_frame[g];
    // [phi, (w,v)] -> [bs(phi), v] = [p0, B v]
    E.S[g] = change_of_coords_base(v, a.rep_base[G.src[g]], frame_bs(v, f)).B * proj_v;
    // the target of (w,v) in R^(l,k) at d is d w + v
    Mat d = frame_dphi(v, f);
    E.T[g] = change_of_coords_base(v, a.rep_base[G.tgt[g]], frame_bt(v, f)).B * hcat(d, I(k));
    Mat Nd = blocks(-I(l), Mat::zero(l, k), d, I(k));
    GL2Element e = change_of_coords(v, a.rep_frame[G.inv[g]], frame_bi(v, f));
    E.Inv[g] = e.block() * Nd;
  }
  for (Object x = 0; x < G.n_objects(); ++x) {
    GL2Element e = change_of_coords(v, a.rep_frame[G.unit[x]], frame_bu(v, a.rep_base[x]));
    E.U[x] = e.block() * vcat(Mat::zero(l, k), I(k));
  }
  for (auto [g, h] : G.composable_pairs()) {
    const SFrame& fg = a.rep_frame[g];
    const SFrame& fh = a.rep_frame[h];
    // move the representative at h so that it composes with the one at g
    GL1Element f = change_of_coords_base(v, frame_bt(v, fh), frame_bs(v, fg));
    GL2Element u = gl2_u21(f);
    SFrame fh2 = act2(v, fh, u);
    SFrame prod = frame_bm(v, fg, fh2);
    GL2Element e = change_of_coords(v, a.rep_frame[G.comp_at(g, h)], prod);
    E.mul(g, h) = e.block() * mR * blockdiag(I(n), mat_inv(u.block()));
  }
  return a;
}

Report certify_associated(const VBGroupoid& v, const AssociatedVB& a, const SampledPB& sp, const VerifyOptions& opt,
                          long changes_per_arrow) {
  Report rep = fresh("associated_vb", opt);
  const auto& G = v.base;
  const VBGroupoid& E = a.E;
  const std::size_t l = v.l, n = v.n();
  auto problems = vbg_validate(E);
  std::string joined;
  for (auto& p : problems) joined += p + "; ";
  rep.add_text("assoc.validate", 0, problems.empty(), joined);

  std::vector<Mat> alpha(G.n_arrows()), beta(G.n_objects());
  for (Arrow g = 0; g < G.n_arrows(); ++g) alpha[g] = a.rep_frame[g].Phi;
  for (Object x = 0; x < G.n_objects(); ++x) beta[x] = a.rep_base[x].phi_b;

  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    rep.add("assoc.rank", g, rank(alpha[g]) == n, {{"alpha", alpha[g]}});
    rep.add("assoc.iso_S", g, v.S[g] * alpha[g] == beta[G.src[g]] * E.S[g], {{"S_alpha", v.S[g] * alpha[g]}});
    rep.add("assoc.iso_T", g, v.T[g] * alpha[g] == beta[G.tgt[g]] * E.T[g], {{"T_alpha", v.T[g] * alpha[g]}});
    rep.add("assoc.iso_Inv", g, v.Inv[g] * alpha[g] == alpha[G.inv[g]] * E.Inv[g], {{"Inv", E.Inv[g]}});
  }
  for (Object x = 0; x < G.n_objects(); ++x) {
    rep.add("assoc.base_rank", x, rank(beta[x]) == v.k, {{"beta", beta[x]}});
    rep.add("assoc.iso_U", x, alpha[G.unit[x]] * E.U[x] == v.U[x] * beta[x], {{"U", E.U[x]}});
  }
  long pi = 0;
  for (auto [g, h] : G.composable_pairs()) {
    if (!problems.empty()) break;
    Mat F = fibered_basis(E, g, h);
    Mat lhs = v.mul(g, h) * blockdiag(alpha[g], alpha[h]) * F;
    Mat rhs = alpha[G.comp_at(g, h)] * E.mul(g, h) * F;
    rep.add("assoc.iso_Mul", pi++, lhs == rhs, {{"lhs", lhs}, {"rhs", rhs}});
  }

  Rng rng(opt.seed ^ 0x3c3c3c3cULL);
  long t = 0;
  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    for (long c = 0; c < changes_per_arrow; ++c, ++t) {
      const auto& fs = sp.frames[g];
      const SFrame& f = fs[rng.below(fs.size())];
      GL2Element e = rand_gl2_at(rng, frame_dphi(v, f), l);
      Mat x = rand_mat(rng, n, 1);
      // [phi.e, e^-1 x] and [phi, x] name the same class
      Mat lhs = act2(v, f, e).Phi * (mat_inv(e.block()) * x);
      rep.add("assoc.well_defined", t, lhs == f.Phi * x, {{"lhs", lhs}, {"rhs", f.Phi * x}});
      Object y = G.src[g];
      const auto& ps = sp.basepairs[y];
      const BasePair& p = ps[rng.below(ps.size())];
      GL1Element f1 = rand_gl1_at(rng, basepair_moment(v, p));
      Mat vb = rand_mat(rng, v.k, 1), wc = rand_mat(rng, l, 1);
      BasePair q = act1(v, p, f1);
      bool ok = q.phi_b * (mat_inv(f1.B) * vb) == p.phi_b * vb && q.phi_c * (mat_inv(f1.A) * wc) == p.phi_c * wc;
      rep.add("assoc.base_well_defined", t, ok, {{"phi_b", p.phi_b}, {"B", f1.B}});
    }
  }
  return rep;
}

SFrame assoc_frame_of(const VBGroupoid& v, const AssociatedVB& a, const SFrame& p) {
  return {p.g, change_of_coords(v, a.rep_frame[p.g], p).block()};
}

Report roundtrip_frames(const VBGroupoid& v, const AssociatedVB& a, const SampledPB& sp, const VerifyOptions& opt) {
  Report rep = fresh("roundtrip_frames", opt);
  const auto& G = v.base;
  const VBGroupoid& E = a.E;
  Rng rng(opt.seed ^ 0x77777777ULL);
  long t = 0;
  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    const auto& fs = sp.frames[g];
    std::vector<SFrame> imgs;
    for (const SFrame& p : fs) {
      guarded(rep, "roundtrip.frame", t, [&] {
        SFrame phi = assoc_frame_of(v, a, p);
        imgs.push_back(phi);
        rep.add("roundtrip.sbis", t, frame_is_sbis(E, g, phi.Phi), {{"phi_p", phi.Phi}});
        rep.add("roundtrip.evaluates_back", t, a.rep_frame[g].Phi * phi.Phi == p.Phi, {{"phi_p", phi.Phi}});
        rep.add("roundtrip.moment", t, frame_dphi(E, phi) == frame_dphi(v, p),
                {{"d_assoc", frame_dphi(E, phi)}, {"d", frame_dphi(v, p)}});
        GL2Element e = rand_gl2_at(rng, frame_dphi(v, p), v.l);
        SFrame moved = assoc_frame_of(v, a, act2(v, p, e));
        SFrame want = act2(E, phi, e);
        rep.add("roundtrip.equivariance", t, moved == want, {{"phi_pe", moved.Phi}, {"act", want.Phi}});
        rep.add("roundtrip.recovers_element", t, change_of_coords(E, phi, moved) == e, {{"J", e.J}});
        SFrame psi = rand_sframe(rng, E, g);
        SFrame pulled{g, a.rep_frame[g].Phi * psi.Phi};
        rep.add("roundtrip.surjective", t, frame_is_sbis(v, g, pulled.Phi) && assoc_frame_of(v, a, pulled) == psi,
                {{"psi", psi.Phi}});
      });
      ++t;
    }
    bool injective = true;
    for (std::size_t i = 0; i < imgs.size(); ++i)
      for (std::size_t j = i + 1; j < imgs.size(); ++j)
        if ((fs[i] != fs[j]) && imgs[i] == imgs[j]) injective = false;
    rep.add("roundtrip.injective", g, injective);
  }
  for (Object x = 0; x < G.n_objects(); ++x) {
    std::vector<BasePair> imgs;
    const auto& qs = sp.basepairs[x];
    for (const BasePair& q : qs) {
      guarded(rep, "roundtrip.base", t, [&] {
        SFrame phi = assoc_frame_of(v, a, frame_bu(v, q));
        BasePair qq = frame_bs(E, phi);
        imgs.push_back(qq);
        rep.add("roundtrip.base_unit", t, frame_bu(E, qq) == phi, {{"phi", phi.Phi}});
        rep.add("roundtrip.base_evaluates_back", t, a.rep_base[x].phi_b * qq.phi_b == q.phi_b, {{"q_b", qq.phi_b}});
      });
      ++t;
    }
    bool injective = true;
    for (std::size_t i = 0; i < imgs.size(); ++i)
      for (std::size_t j = i + 1; j < imgs.size(); ++j)
        if (qs[i] != qs[j] && imgs[i] == imgs[j]) injective = false;
    rep.add("roundtrip.base_injective", x, injective);
  }
  return rep;
}

Section section_scalar_unit(std::size_t l, std::size_t k, const Q& c) {
  return [l, k, c](const Mat& d) { return gl2_u21(GL1Element{d, c * Mat::identity(l), c * Mat::identity(k)}); };
}

Section section_generic(std::size_t l, std::uint64_t seed) {
  return [l, seed](const Mat& d) {
    Rng r(seed ^ fnv1a(d.str()));
    for (;;) {
      GL2Element e = rand_gl2_at(r, d, l);
      if (!e.J.is_zero() || e.J.empty()) return e;
    }
  };
}

Report section_translation(const VBGroupoid& v, const SampledPB& sp, const Section& b, const VerifyOptions& opt,
                           bool check_morphism) {
  Report rep = fresh("section_translation", opt);
  if (sample_empty(sp)) {
    rep.warnings.push_back("empty frame sample; section checks vacuous");
    return rep;
  }
  auto value = [&](const Mat& d) {
    GL2Element e = b(d);
    if (gl2_t20(e) != d || !gl2_member(e)) throw Error(ErrorKind::NotASection, "t20(b(d)) != d at d = " + d.str());
    return e;
  };
  auto phi_b = [&](const SFrame& p) { return act2(v, p, value(frame_dphi(v, p))); };
  Rng rng(opt.seed ^ 0x12121212ULL);
  for (long t = 0; t < opt.trials; ++t) {
    const SFrame& p = pick_frame(rng, sp);
    const auto& same = sp.frames[p.g];
    const SFrame& p2 = same[rng.below(same.size())];
    guarded(rep, "section.bijective", t, [&] {
      GL2Element e = value(frame_dphi(v, p));
      SFrame img = phi_b(p);
      bool ok = act2(v, img, gl2_i20(e)) == p && (p == p2 || phi_b(p2) != img);
      rep.add("section.bijective", t, ok, {{"image", img.Phi}});
    });
    guarded(rep, "section.affine", t, [&] {
      GL2Element e = value(frame_dphi(v, p));
      GL2Element b1 = gl2_u21(gl2_t21(e));
      BasePair q = frame_bs(v, p);
      SFrame sigma = act2(v, frame_bu(v, q), value(basepair_moment(v, q)));
      SFrame lhs = frame_bm(v, act2(v, p, b1), sigma);
      rep.add("section.affine", t, lhs == phi_b(p), {{"lhs", lhs.Phi}, {"phi_b", phi_b(p).Phi}});
    });
    if (check_morphism) {
      auto fs = rand_frame_chain(rng, v, rand_arrow_chain(rng, v.base, 2));
      guarded(rep, "section.morphism", t, [&] {
        SFrame lhs = phi_b(frame_bm(v, fs[0], fs[1]));
        SFrame rhs = frame_bm(v, phi_b(fs[0]), phi_b(fs[1]));
        rep.add("section.morphism", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
      });
    }
  }
  return rep;
}

}
