#include "vbpb/suites.hpp"

namespace vbpb {

namespace {

const char* kNames[] = {"groupoid", "gl2", "action", "duality", "roundtrip", "all"};

Report fresh(const char* cmd, const SuiteOptions& opt) {
  Report r;
  r.command = cmd;
  r.instance = opt.instance;
  r.seed = opt.seed;
  return r;
}

VerifyOptions verify_opts(const SuiteOptions& opt) { return {opt.instance, opt.trials, opt.seed}; }

template <class Fn>
void guarded(Report& rep, const std::string& check, long trial, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& ex) {
    rep.add_text(check, trial, false, ex.what());
  }
}

bool sample_empty(const SampledPB& sp) {
  for (auto& fs : sp.frames)
    if (!fs.empty()) return false;
  return true;
}

}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kNames[i]) return Suite(i);
  return std::nullopt;
}

const char* suite_name(Suite s) { return kNames[int(s)]; }

Report suite_groupoid(const VBGroupoid& v, const SuiteOptions& opt) {
  Report rep = fresh("check:groupoid", opt);
  const auto& G = v.base;
  auto gp = gpd_validate(G);
  std::string joined;
  for (auto& p : gp) joined += p + "; ";
  rep.add_text("base.validate", 0, gp.empty(), joined);
  auto vp = vbg_validate(v);
  joined.clear();
  for (auto& p : vp) joined += p + "; ";
  rep.add_text("vb.validate", 0, vp.empty(), joined);
  if (!vp.empty()) return rep;

  SampledPB sp = sample_frames(v, opt.seed, opt.per_arrow, opt.per_object);
  if (sample_empty(sp)) {
    rep.warnings.push_back("empty frame sample; frame checks vacuous");
    return rep;
  }
  long t = 0;
  for (Arrow g = 0; g < G.n_arrows(); ++g)
    for (const SFrame& f : sp.frames[g]) {
      Mat d = frame_dphi(v, f);
      rep.add("sample.sbis", t, frame_is_sbis(v, f.g, f.Phi), {{"Phi", f.Phi}});
      rep.add("moment.bs_bt", t,
              basepair_moment(v, frame_bs(v, f)) == d && basepair_moment(v, frame_bt(v, f)) == d,
              {{"d_phi", d}, {"mu_bs", basepair_moment(v, frame_bs(v, f))}, {"mu_bt", basepair_moment(v, frame_bt(v, f))}});
      ++t;
    }

  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (t = 0; t < opt.trials; ++t) {
    auto arrows = rand_arrow_chain(rng, G, 3);
    auto fs = rand_frame_chain(rng, v, arrows);
    const SFrame &f1 = fs[0], &f2 = fs[1], &f3 = fs[2];
    guarded(rep, "frame.structure", t, [&] {
      SFrame f12 = frame_bm(v, f1, f2);
      rep.add("frame.product_sbis", t, frame_is_sbis(v, f12.g, f12.Phi) && f12.g == G.comp_at(f1.g, f2.g),
              {{"product", f12.Phi}});
      rep.add("frame.product_ends", t, frame_bs(v, f12) == frame_bs(v, f2) && frame_bt(v, f12) == frame_bt(v, f1),
              {{"product", f12.Phi}});
      SFrame lhs = frame_bm(v, f12, f3), rhs = frame_bm(v, f1, frame_bm(v, f2, f3));
      rep.add("frame.associativity", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
      BasePair s = frame_bs(v, f1), b = frame_bt(v, f1);
      SFrame us = frame_bu(v, s), ub = frame_bu(v, b);
      rep.add("frame.unit_ends", t,
              frame_bs(v, us) == s && frame_bt(v, us) == s && frame_bs(v, ub) == b && frame_bt(v, ub) == b,
              {{"unit", us.Phi}});
      rep.add("frame.unit_law", t, frame_bm(v, f1, us) == f1 && frame_bm(v, ub, f1) == f1, {{"Phi", f1.Phi}});
      SFrame inv = frame_bi(v, f1);
      rep.add("frame.inverse_ends", t,
              frame_is_sbis(v, inv.g, inv.Phi) && frame_bs(v, inv) == b && frame_bt(v, inv) == s,
              {{"inverse", inv.Phi}});
      rep.add("frame.inverse_law", t, frame_bm(v, f1, inv) == ub && frame_bm(v, inv, f1) == us,
              {{"inverse", inv.Phi}});
      rep.add("frame.inverse_involution", t, frame_bi(v, inv) == f1, {{"inverse", inv.Phi}});
      Mat d = frame_dphi(v, f1);
      rep.add("moment.d_constancy", t, frame_dphi(v, f2) == d && frame_dphi(v, f3) == d && frame_dphi(v, f12) == d,
              {{"d1", d}, {"d2", frame_dphi(v, f2)}, {"d12", frame_dphi(v, f12)}});
    });

    guarded(rep, "F.bijection", t, [&] {
      auto [fe, p] = frame_F(v, f1);
      SFrame back = frame_F_inv(v, fe, p);
      rep.add("F.roundtrip_frame", t, back == f1, {{"Phi", f1.Phi}, {"back", back.Phi}});
      BasePair s = frame_bs(v, f1), b = frame_bt(v, f1);
      rep.add("F.bt_is_fat_action", t,
              fat_act_core(v, fe, s.phi_c) == b.phi_c && fat_act_base(v, fe, s.phi_b) == b.phi_b,
              {{"bt_c", b.phi_c}, {"act_c", fat_act_core(v, fe, s.phi_c)}, {"bt_b", b.phi_b},
               {"act_b", fat_act_base(v, fe, s.phi_b)}});
      Arrow g = arrows[1];
      FatElement H = fat_make(v, g, rand_fat_H(rng, v, g));
      BasePair q = rand_basepair(rng, v, G.src[g]);
      SFrame built = frame_F_inv(v, H, q);
      auto [H2, q2] = frame_F(v, built);
      rep.add("F.roundtrip_pair", t, frame_is_sbis(v, g, built.Phi) && H2 == H && q2 == q,
              {{"H", H.H.basis()}, {"H_back", H2.H.basis()}, {"Phi", built.Phi}});
    });

    guarded(rep, "fat.functoriality", t, [&] {
      Arrow g = arrows[0], h = arrows[1];
      FatElement a = fat_make(v, g, rand_fat_H(rng, v, g)), b = fat_make(v, h, rand_fat_H(rng, v, h));
      FatElement ab = fat_compose(v, a, b);
      Mat eb = rand_mat(rng, v.k, 2), ec = rand_mat(rng, v.l, 2);
      bool comp = fat_is_member(v, ab.g, ab.H) && ab.g == G.comp_at(g, h) &&
                  fat_act_base(v, ab, eb) == fat_act_base(v, a, fat_act_base(v, b, eb)) &&
                  fat_act_core(v, ab, ec) == fat_act_core(v, a, fat_act_core(v, b, ec));
      rep.add("fat.composition", t, comp, {{"H_ab", ab.H.basis()}});
      FatElement u = fat_unit(v, G.tgt[h]);
      rep.add("fat.unit", t,
              fat_act_base(v, u, eb) == eb && fat_act_core(v, u, ec) == ec && fat_compose(v, u, b) == b,
              {{"H_unit", u.H.basis()}});
      FatElement bi = fat_inverse(v, b);
      rep.add("fat.inverse", t,
              fat_act_base(v, bi, fat_act_base(v, b, eb)) == eb && fat_act_core(v, bi, fat_act_core(v, b, ec)) == ec &&
                  fat_compose(v, b, bi) == fat_unit(v, G.tgt[h]),
              {{"H_inv", bi.H.basis()}});
    });
  }
  return rep;
}

Report suite_gl2(std::size_t l, std::size_t k, const SuiteOptions& opt) {
  Report rep = fresh("check:gl2", opt);
  rep.instance = opt.instance + ":GL(" + std::to_string(l) + "," + std::to_string(k) + ")";
  Rng rng(opt.seed ^ 0x2545f4914f6cdd1dULL);
  for (long t = 0; t < opt.trials; ++t) {
    Mat d0 = rand_mat(rng, k, l);
    GL2Element a = rand_gl2_at(rng, d0, l);
    GL2Element b = rand_gl2_at(rng, gl2_s20(a), l);
    GL2Element c = rand_gl2_at(rng, gl2_s20(b), l);
    guarded(rep, "gl2.o20", t, [&] {
      rep.add("gl2.member", t, gl2_member(a) && gl2_member(b) && gl2_member(c), {{"J", a.J}});
      GL2Element ab = gl2_m20(a, b);
      rep.add("gl2.o20_ends", t, gl2_member(ab) && gl2_t20(ab) == gl2_t20(a) && gl2_s20(ab) == gl2_s20(b),
              {{"t20", gl2_t20(ab)}, {"s20", gl2_s20(ab)}});
      GL2Element l1 = gl2_m20(ab, c), r1 = gl2_m20(a, gl2_m20(b, c));
      rep.add("gl2.o20_assoc", t, l1 == r1, {{"J_lhs", l1.J}, {"J_rhs", r1.J}});
      rep.add("gl2.o20_unit", t,
              gl2_m20(gl2_u20(gl2_t20(a), l), a) == a && gl2_m20(a, gl2_u20(gl2_s20(a), l)) == a,
              {{"A", a.A}});
      GL2Element ai = gl2_i20(a);
      rep.add("gl2.o20_inverse", t,
              gl2_m20(a, ai) == gl2_u20(gl2_t20(a), l) && gl2_m20(ai, a) == gl2_u20(gl2_s20(a), l),
              {{"J_inv", ai.J}});
      rep.add("gl2.o20_block", t, ab.block() == a.block() * b.block(), {{"block", ab.block()}});
    });
    guarded(rep, "gl2.o21", t, [&] {
      GL2Element p = rand_gl2_at(rng, d0, l);
      GL2Element q = rand_gl2_with_s21(rng, gl2_t21(p));
      GL2Element r = rand_gl2_with_s21(rng, gl2_t21(q));
      GL1Element sp = gl2_s21(p), tp = gl2_t21(p);
      rep.add("gl2.globular", t,
              gl1_t10(sp) == gl2_t20(p) && gl1_t10(tp) == gl2_t20(p) && gl1_s10(sp) == gl2_s20(p) &&
                  gl1_s10(tp) == gl2_s20(p),
              {{"t20", gl2_t20(p)}, {"s20", gl2_s20(p)}});
      GL2Element qp = gl2_m21(q, p);
      rep.add("gl2.o21_ends", t, gl2_member(qp) && gl2_s21(qp) == gl2_s21(p) && gl2_t21(qp) == gl2_t21(q),
              {{"J", qp.J}});
      GL2Element l1 = gl2_m21(gl2_m21(r, q), p), r1 = gl2_m21(r, gl2_m21(q, p));
      rep.add("gl2.o21_assoc", t, l1 == r1, {{"J_lhs", l1.J}, {"J_rhs", r1.J}});
      rep.add("gl2.o21_unit", t, gl2_m21(gl2_u21(gl2_t21(p)), p) == p && gl2_m21(p, gl2_u21(gl2_s21(p))) == p,
              {{"J", p.J}});
      GL2Element pi = gl2_i21(p);
      rep.add("gl2.o21_inverse", t,
              gl2_m21(p, pi) == gl2_u21(gl2_t21(p)) && gl2_m21(pi, p) == gl2_u21(gl2_s21(p)),
              {{"J_inv", pi.J}});
    });
    guarded(rep, "gl2.interchange", t, [&] {
      // a2 o21 a1 on the left, b2 o21 b1 on the right; a's sit to the left of b's in o20
      GL2Element a1 = rand_gl2_at(rng, d0, l);
      GL2Element a2 = rand_gl2_with_s21(rng, gl2_t21(a1));
      GL2Element b1 = rand_gl2_at(rng, gl2_s20(a1), l);
      GL2Element b2 = rand_gl2_with_s21(rng, gl2_t21(b1));
      GL2Element lhs = gl2_m21(gl2_m20(a2, b2), gl2_m20(a1, b1));
      GL2Element rhs = gl2_m20(gl2_m21(a2, a1), gl2_m21(b2, b1));
      rep.add("gl2.interchange", t, lhs == rhs, {{"J_lhs", lhs.J}, {"J_rhs", rhs.J}});
    });
    guarded(rep, "gl2.transpose", t, [&] {
      GL2Element at = gl2_transpose(a);
      rep.add("gl2.transpose_member", t, gl2_member(at) && at.l() == k && at.k() == l, {{"d", at.d}});
      rep.add("gl2.transpose_involution", t, gl2_transpose(at) == a, {{"J", at.J}});
      rep.add("gl2.transpose_o20", t, gl2_transpose(gl2_m20(a, b)) == gl2_m20(gl2_transpose(b), at),
              {{"J", gl2_transpose(gl2_m20(a, b)).J}});
      GL2Element q = rand_gl2_with_s21(rng, gl2_t21(a));
      rep.add("gl2.transpose_o21", t, gl2_transpose(gl2_m21(q, a)) == gl2_m21(at, gl2_transpose(q)),
              {{"J", gl2_transpose(gl2_m21(q, a)).J}});
    });
    guarded(rep, "gl2.gle", t, [&] {
      GLEFromGL2 g = gle_from_gl2(a);
      bool ok = gle_member(g.d_x, g.d_y, g.A, g.B, g.cell) && gle_member(g.d_x, g.d_y, g.cell.A2, g.cell.B2);
      rep.add("gl2.gle_cross_check", t, ok, {{"d_x", g.d_x}, {"d_y", g.d_y}, {"J_E", g.cell.J}});
    });
  }

  // isotropy crossed module at three random base points
  for (int pt = 0; pt < 3; ++pt) {
    Mat d = rand_mat(rng, k, l);
    CrossedModule cm = gl2_isotropy_crossed_module(l, k, d);
    for (long t = 0; t < opt.trials; ++t) {
      long trial = pt * opt.trials + t;
      guarded(rep, "xmod.identities", trial, [&] {
        Mat J1 = rand_isotropy_J(rng, d), J2 = rand_isotropy_J(rng, d);
        GL1Element g1 = rand_isotropy(rng, d), g2 = rand_isotropy(rng, d);
        rep.add("xmod.membership", trial,
                cm.in_H(J1) && cm.in_G(g1) && cm.in_G(cm.boundary(J1)) && cm.in_H(cm.conjugate(g1, J1)),
                {{"d", d}, {"J", J1}});
        GL1Element lhs = cm.boundary(cm.conjugate(g1, J1));
        GL1Element rhs = cm.g_mul(cm.g_mul(g1, cm.boundary(J1)), cm.g_inv(g1));
        rep.add("xmod.equivariance", trial, lhs == rhs, {{"d", d}, {"lhs_A", lhs.A}, {"rhs_A", rhs.A}});
        Mat pl = cm.conjugate(cm.boundary(J1), J2);
        Mat pr = cm.h_mul(cm.h_mul(J1, J2), cm.h_inv(J1));
        rep.add("xmod.peiffer", trial, pl == pr, {{"d", d}, {"lhs", pl}, {"rhs", pr}});
        rep.add("xmod.boundary_hom", trial,
                cm.boundary(cm.h_mul(J1, J2)) == cm.g_mul(cm.boundary(J1), cm.boundary(J2)), {{"d", d}});
        bool act = cm.conjugate(cm.g_mul(g1, g2), J1) == cm.conjugate(g1, cm.conjugate(g2, J1)) &&
                   cm.conjugate(g1, cm.h_mul(J1, J2)) == cm.h_mul(cm.conjugate(g1, J1), cm.conjugate(g1, J2));
        rep.add("xmod.action", trial, act, {{"d", d}});
      });
    }
  }
  return rep;
}

Report suite_action(const VBGroupoid& v, const SuiteOptions& opt) {
  Report rep = fresh("check:action", opt);
  SampledPB sp = sample_frames(v, opt.seed, opt.per_arrow, opt.per_object);
  VerifyOptions vo = verify_opts(opt);
  rep.merge(verify_2action(v, sp, vo));
  rep.merge(principality_check(v, sp, vo));
  return rep;
}

namespace {

// Base map induced on units: p -> source pair of the image of bu(p).
template <class Img, class Bs>
BasePair induced(const Img& img, const Bs& bs, const VBGroupoid& v, const BasePair& p) {
  return bs(img(frame_bu(v, p)));
}

}

Report suite_duality(const VBGroupoid& v, const SuiteOptions& opt) {
  Report rep = fresh("check:duality", opt);
  if (opt.per_arrow == 0) {
    rep.warnings.push_back("empty frame sample; duality checks vacuous");
    return rep;
  }
  VBGroupoid dv = vbg_dual(v), op = vbg_opposite(v), dop = vbg_opposite(dv);
  TFrameGroupoid TE(v), TD(dv);
  auto dd = vbg_double_dual_check(v);
  std::string joined;
  for (auto& p : dd) joined += p + "; ";
  rep.add_text("dual.validate", 0, vbg_validate(dv).empty(), "dual fails validation");
  rep.add_text("dual.double_dual", 0, dd.empty(), joined);

  auto psi = [&](const SFrame& f) { return frame_psi(v, f); };
  auto dual = [&](const SFrame& f) { return frame_dual(f); };
  auto tbsE = [&](const TFrame& t) { return TE.bs(t); };
  auto tbsD = [&](const TFrame& t) { return TD.bs(t); };

  Rng rng(opt.seed ^ 0xd1b54a32d192ed03ULL);
  const auto& G = v.base;
  for (long t = 0; t < opt.trials; ++t) {
    auto arrows = rand_arrow_chain(rng, G, 2);
    auto fs = rand_frame_chain(rng, v, arrows);
    const SFrame &f1 = fs[0], &f2 = fs[1];
    guarded(rep, "psi.structure", t, [&] {
      TFrame P = psi(f1);
      rep.add("psi.tbis", t, frame_is_tbis(v, P.g, P.Phi) && TE.is_frame(P) && P.g == G.inv[f1.g], {{"Psi", P.Phi}});
      rep.add("psi.involution", t, frame_psi_inv(v, P) == f1 && frame_psi(v, frame_psi_inv(v, P)) == P,
              {{"Psi", P.Phi}});
      // Psi sends an arrow at g to one at g^-1, so it exchanges ends and reverses products
      BasePair ps = induced(psi, tbsE, v, frame_bs(v, f1)), pt = induced(psi, tbsE, v, frame_bt(v, f1));
      rep.add("psi.bs", t, TE.bt(P) == ps, {{"tbt", TE.bt(P).phi_c}, {"want", ps.phi_c}});
      rep.add("psi.bt", t, TE.bs(P) == pt, {{"tbs", TE.bs(P).phi_c}, {"want", pt.phi_c}});
      TFrame lhs = psi(frame_bm(v, f1, f2)), rhs = TE.bm(psi(f2), P);
      rep.add("psi.bm", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
      BasePair s = frame_bs(v, f1);
      rep.add("psi.bu", t, psi(frame_bu(v, s)) == TE.bu(ps) && TE.bt(TE.bu(ps)) == ps, {{"Psi_u", psi(frame_bu(v, s)).Phi}});
      rep.add("psi.bi", t, psi(frame_bi(v, f1)) == TE.bi(P), {{"lhs", psi(frame_bi(v, f1)).Phi}});
      GL2Element e = rand_gl2_at(rng, frame_dphi(v, f1), v.l);
      SFrame el = tframe_to_op(psi(act2(v, f1, e))), er = act2(op, tframe_to_op(P), e);
      rep.add("psi.equivariance", t, el == er, {{"lhs", el.Phi}, {"rhs", er.Phi}});
    });
    guarded(rep, "dual.structure", t, [&] {
      TFrame D = dual(f1);
      rep.add("dual.tbis", t, frame_is_tbis(dv, D.g, D.Phi) && TD.is_frame(D), {{"Phi_dual", D.Phi}});
      BasePair ds = induced(dual, tbsD, v, frame_bs(v, f1)), dt = induced(dual, tbsD, v, frame_bt(v, f1));
      rep.add("dual.bs", t, TD.bs(D) == ds, {{"tbs", TD.bs(D).phi_c}, {"want", ds.phi_c}});
      rep.add("dual.bt", t, TD.bt(D) == dt, {{"tbt", TD.bt(D).phi_c}, {"want", dt.phi_c}});
      TFrame lhs = dual(frame_bm(v, f1, f2)), rhs = TD.bm(D, dual(f2));
      rep.add("dual.bm", t, lhs == rhs, {{"lhs", lhs.Phi}, {"rhs", rhs.Phi}});
      BasePair s = frame_bs(v, f1);
      rep.add("dual.bu", t, dual(frame_bu(v, s)) == TD.bu(ds) && TD.bt(TD.bu(ds)) == ds, {{"dual_u", dual(frame_bu(v, s)).Phi}});
      rep.add("dual.bi", t, dual(frame_bi(v, f1)) == TD.bi(D), {{"lhs", dual(frame_bi(v, f1)).Phi}});
      GL2Element e = rand_gl2_at(rng, frame_dphi(v, f1), v.l);
      GL2Element et = gl2_transpose(gl2_i20(e));
      SFrame el = tframe_to_op(dual(act2(v, f1, e))), er = act2(dop, tframe_to_op(D), et);
      rep.add("dual.equivariance", t, el == er, {{"lhs", el.Phi}, {"rhs", er.Phi}});
      rep.add("dual.moment", t, frame_dphi(dop, tframe_to_op(D)) == gl2_transpose(gl2_u20(frame_dphi(v, f1), v.l)).d,
              {{"d", frame_dphi(v, f1)}, {"d_dual", frame_dphi(dop, tframe_to_op(D))}});
    });
  }
  return rep;
}

Report suite_roundtrip(const VBGroupoid& v, const SuiteOptions& opt) {
  Report rep = fresh("check:roundtrip", opt);
  SampledPB sp = sample_frames(v, opt.seed, opt.per_arrow, opt.per_object);
  if (sample_empty(sp)) {
    rep.warnings.push_back("empty frame sample; roundtrip checks vacuous");
    return rep;
  }
  VerifyOptions vo = verify_opts(opt);
  guarded(rep, "assoc.construct", 0, [&] {
    AssociatedVB a = associated_vb(v, sp);
    rep.merge(certify_associated(v, a, sp, vo, opt.changes_per_arrow));
    rep.merge(roundtrip_frames(v, a, sp, vo));
  });
  rep.merge(section_translation(v, sp, section_scalar_unit(v.l, v.k, Q(2)), vo, true));
  rep.merge(section_translation(v, sp, section_generic(v.l, opt.seed), vo, false));
  return rep;
}

Report run_suite(const VBGroupoid& v, Suite s, const SuiteOptions& opt) {
  switch (s) {
    case Suite::Groupoid: return suite_groupoid(v, opt);
    case Suite::GL2: return suite_gl2(v.l, v.k, opt);
    case Suite::Action: return suite_action(v, opt);
    case Suite::Duality: return suite_duality(v, opt);
    case Suite::Roundtrip: return suite_roundtrip(v, opt);
    case Suite::All: break;
  }
  Report rep = fresh("check:all", opt);
  for (Suite part : {Suite::Groupoid, Suite::GL2, Suite::Action, Suite::Duality, Suite::Roundtrip})
    rep.merge(run_suite(v, part, opt));
  return rep;
}

}
