#!/usr/bin/env python3
"""Symbolic derivation + code generation for the five-link walker kernels.

Derives the planar five-link biped dynamics (mass matrix, Christoffel
Coriolis matrix, gravity vector, foot kinematics/Jacobians) with sympy and
emits two numeric backends with identical call surfaces:

  src/gaitmode/_kernels_py.py   pure Python (math + numpy), fallback backend
  src/gaitmode/_speedups.pyx    Cython translation of the same expressions

Also emits fused "observer terms" kernels that evaluate the
constraint-reduced momentum p and drift beta for a pinned-foot hypothesis
directly from the measured angles, using the closed-form reduction
H = [-A_ang; I] valid for planar point contact.

Run `python tools/gen_kernels.py --check` to regenerate and numerically
validate the emitted Python module against finite differences and an
independent numpy composition of the reduced terms.

Generalized coordinates: q = (xb, yb, thb, q1, q2, q3, q4)
  xb, yb   base (hip) position [m]
  thb      torso angle from vertical, CCW [rad]
  q1, q2   left hip, left knee [rad]   (zero = straight)
  q3, q4   right hip, right knee [rad]
Parameter vector (21,): masses m0..m4, lengths l0..l4, com offsets c0..c4,
inertias I0..I4, gravity g.  Link order: torso, left thigh, left shank,
right thigh, right shank.
"""

import argparse
import sys
from pathlib import Path

import sympy as sp

NQ = 7
NY = 5
PAR_NAMES = (
    [f"m{i}" for i in range(5)]
    + [f"l{i}" for i in range(5)]
    + [f"c{i}" for i in range(5)]
    + [f"I{i}" for i in range(5)]
    + ["g"]
)


def derive():
    q = sp.Matrix(sp.symbols("q0:7", real=True))
    qd = sp.Matrix(sp.symbols("qd0:7", real=True))
    m = sp.symbols("m0:5", positive=True)
    l = sp.symbols("l0:5", positive=True)
    c = sp.symbols("c0:5", positive=True)
    In = sp.symbols("I0:5", positive=True)
    g = sp.Symbol("g", positive=True)

    xb, yb, thb, q1, q2, q3, q4 = q
    hip = sp.Matrix([xb, yb])

    def up(a):
        return sp.Matrix([-sp.sin(a), sp.cos(a)])

    def dn(a):
        return sp.Matrix([sp.sin(a), -sp.cos(a)])

    # absolute link angles (torso measured from vertical-up, legs from
    # vertical-down, all CCW)
    a_t = thb
    a_lt = thb + q1
    a_ls = thb + q1 + q2
    a_rt = thb + q3
    a_rs = thb + q3 + q4

    coms = [
        hip + c[0] * up(a_t),
        hip + c[1] * dn(a_lt),
        hip + l[1] * dn(a_lt) + c[2] * dn(a_ls),
        hip + c[3] * dn(a_rt),
        hip + l[3] * dn(a_rt) + c[4] * dn(a_rs),
    ]
    angles = [a_t, a_lt, a_ls, a_rt, a_rs]
    foot_l = hip + l[1] * dn(a_lt) + l[2] * dn(a_ls)
    foot_r = hip + l[3] * dn(a_rt) + l[4] * dn(a_rs)

    T = sp.S.Zero
    for mi, Ii, pos, ang in zip(m, In, coms, angles):
        v = pos.jacobian(q) * qd
        w = (sp.Matrix([ang]).jacobian(q) * qd)[0]
        T += mi * (v.dot(v)) / 2 + Ii * w**2 / 2
    T = sp.expand(sp.trigsimp(T))
    V = g * sum(mi * pos[1] for mi, pos in zip(m, coms))

    M = sp.hessian(T, qd)
    M = M.applyfunc(lambda e: sp.trigsimp(sp.expand(e)))
    G = sp.Matrix([sp.diff(V, qi) for qi in q])

    # dM[k] = dM/dq_k; the base-translation coordinates never appear in M
    dM = [M.diff(qi) for qi in q]
    assert dM[0].is_zero_matrix and dM[1].is_zero_matrix

    # Christoffel symbols of the first kind: chr3[i][j][k]
    half = sp.Rational(1, 2)
    chr3 = [
        [
            [half * (dM[k][i, j] + dM[j][i, k] - dM[i][j, k]) for k in range(NQ)]
            for j in range(NQ)
        ]
        for i in range(NQ)
    ]
    C = sp.Matrix(
        NQ, NQ, lambda i, j: sum(chr3[i][j][k] * qd[k] for k in range(NQ))
    )
    bias = sp.Matrix(
        [sum(chr3[i][j][k] * qd[j] * qd[k] for j in range(NQ) for k in range(NQ))
         for i in range(NQ)]
    )

    A_l = foot_l.jacobian(q)
    A_r = foot_r.jacobian(q)
    assert A_l[:, :2] == sp.eye(2) and A_r[:, :2] == sp.eye(2)
    Adot_l = sum((A_l.diff(qi) * qd[k] for k, qi in enumerate(q)), sp.zeros(2, NQ))
    Adot_r = sum((A_r.diff(qi) * qd[k] for k, qi in enumerate(q)), sp.zeros(2, NQ))

    com_total = sum((mi * pos for mi, pos in zip(m, coms)), sp.zeros(2, 1)) / sum(m)

    # --- fused observer kernels (pinned-foot hypothesis, measured angles) ---
    # reduced coords y = (thb, q1..q4); reconstruction qdot = H ydot with
    # H = [-A_ang; I5], A_ang = A[:, 2:7] (translation block of A is I2 and
    # cancels out of everything below)
    yd = sp.Matrix(qd[2:7])  # reuse qd2..qd6 symbols as the measured rates

    def observer_terms(A, Adot):
        A_ang = A[:, 2:]
        base_vel = -A_ang * yd  # (2,)
        u = sp.Matrix.vstack(base_vel, yd)  # full qdot under the hypothesis
        Mu = M * u
        Ctu = sp.Matrix(
            [sum(chr3[i][j][k] * u[i] * u[k] for i in range(NQ) for k in range(NQ))
             for j in range(NQ)]
        )
        Ad_ang = Adot[:, 2:].subs(dict(zip([qd[0], qd[1]], base_vel)))

        def h_t(v7):  # H^T v
            return -A_ang.T * sp.Matrix(v7[:2]) + sp.Matrix(v7[2:])

        p = h_t(Mu)
        beta_free = h_t(Ctu - G) + (-Ad_ang.T * sp.Matrix(Mu[:2]))
        return sp.Matrix.vstack(p, beta_free)  # (10,)

    obs_l = observer_terms(A_l, Adot_l)
    obs_r = observer_terms(A_r, Adot_r)

    # relative foot velocity from joint rates alone (translation columns of
    # A_l - A_r cancel exactly)
    J_rel = (A_l - A_r)[:, 2:]
    assert sp.simplify((A_l - A_r)[:, :2]) == sp.zeros(2, 2)
    vrel = J_rel * yd

    energies = sp.Matrix([T, V])

    kernels = {
        # name: (expr matrix, args, out shape)
        "mass_matrix": (M, ("q", "par"), (7, 7)),
        "coriolis_matrix": (C, ("q", "qd", "par"), (7, 7)),
        "bias_vector": (bias, ("q", "qd", "par"), (7,)),
        "gravity_vector": (G, ("q", "par"), (7,)),
        "foot_pos_left": (foot_l, ("q", "par"), (2,)),
        "foot_pos_right": (foot_r, ("q", "par"), (2,)),
        "foot_jac_left": (A_l, ("q", "par"), (2, 7)),
        "foot_jac_right": (A_r, ("q", "par"), (2, 7)),
        "foot_jacdot_left": (Adot_l, ("q", "qd", "par"), (2, 7)),
        "foot_jacdot_right": (Adot_r, ("q", "qd", "par"), (2, 7)),
        "energies": (energies, ("q", "qd", "par"), (2,)),
        "com_position": (com_total, ("q", "par"), (2,)),
        "obs_terms_left": (obs_l, ("y", "yd", "par"), (10,)),
        "obs_terms_right": (obs_r, ("y", "yd", "par"), (10,)),
        "rel_vel": (vrel, ("y", "yd", "par"), (2,)),
    }
    return kernels


ARG_UNPACK = {
    "q": [f"q{i}" for i in range(7)],
    "qd": [f"qd{i}" for i in range(7)],
    "y": [f"q{i}" for i in range(2, 7)],
    "yd": [f"qd{i}" for i in range(2, 7)],
    "par": PAR_NAMES,
}


def _cse(expr_mat):
    exprs = list(expr_mat)
    reps, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("x"), order="none")
    return reps, reduced


def _used_names(reps, reduced, names):
    free = set()
    for _, e in reps:
        free |= {s.name for s in e.free_symbols}
    for e in reduced:
        free |= {s.name for s in e.free_symbols}
    return [n for n in names if n in free]


def emit_python(name, kernel):
    expr_mat, args, shape = kernel
    reps, reduced = _cse(expr_mat)
    lines = [f"def {name}({', '.join(args)}, out=None):"]
    for a in args:
        names = ARG_UNPACK[a]
        used = _used_names(reps, reduced, names)
        for n in used:
            lines.append(f"    {n} = {a}[{names.index(n)}]")
    pr = sp.printing.pycode
    for s, e in reps:
        lines.append(f"    {s} = {pr(e, fully_qualified_modules=False)}")
    lines.append("    if out is None:")
    lines.append(f"        out = np.empty({shape!r})")
    if len(shape) == 1:
        for i, e in enumerate(reduced):
            lines.append(f"    out[{i}] = {pr(e, fully_qualified_modules=False)}")
    else:
        rows, cols = shape
        for idx, e in enumerate(reduced):
            i, j = divmod(idx, cols)
            lines.append(f"    out[{i}, {j}] = {pr(e, fully_qualified_modules=False)}")
    lines.append("    return out")
    return "\n".join(lines)


def emit_cython(name, kernel):
    expr_mat, args, shape = kernel
    reps, reduced = _cse(expr_mat)
    sig = ", ".join(f"const double* {a}" for a in args)
    lines = [f"cdef void _{name}({sig}, double* out) noexcept nogil:"]
    body = False
    for a in args:
        names = ARG_UNPACK[a]
        used = _used_names(reps, reduced, names)
        for n in used:
            lines.append(f"    cdef double {n} = {a}[{names.index(n)}]")
            body = True
    for s, e in reps:
        lines.append(f"    cdef double {s} = {sp.ccode(e)}")
        body = True
    for idx, e in enumerate(reduced):
        lines.append(f"    out[{idx}] = {sp.ccode(e)}")
        body = True
    if not body:
        lines.append("    pass")
    nout = 1
    for s in shape:
        nout *= s
    wrapper = [
        f"def {name}({', '.join(args)}, out=None):",
    ]
    for a in args:
        wrapper.append(f"    cdef double[::1] {a}_v = _as_f64({a})")
    wrapper.append("    if out is None:")
    wrapper.append(f"        out = np.empty({shape!r})")
    wrapper.append("    cdef double[::1] out_v = out.ravel()")
    call_args = ", ".join(f"&{a}_v[0]" for a in args)
    wrapper.append(f"    _{name}({call_args}, &out_v[0])")
    wrapper.append("    return out")
    return "\n".join(lines), "\n".join(wrapper)


PY_HEADER = '''"""Closed-form dynamics kernels for the planar five-link walker.

Auto-generated by tools/gen_kernels.py -- do not edit by hand.
Pure-Python backend; the compiled backend in _speedups.pyx carries the
same functions.  See tools/gen_kernels.py for conventions.
"""

from math import sin, cos

import numpy as np

COMPILED = False

'''

PY_EPILOGUE = '''

def observer_terms_batch(Y, Yd, par, out=None):
    """Stack obs_terms_{left,right} over rows of Y/Yd -> (n, 2, 10)."""
    Y = np.asarray(Y, dtype=float)
    Yd = np.asarray(Yd, dtype=float)
    n = Y.shape[0]
    if out is None:
        out = np.empty((n, 2, 10))
    for i in range(n):
        obs_terms_left(Y[i], Yd[i], par, out=out[i, 0])
        obs_terms_right(Y[i], Yd[i], par, out=out[i, 1])
    return out


def rel_vel_batch(Y, Yd, par, out=None):
    """Stack rel_vel over rows of Y/Yd -> (n, 2)."""
    Y = np.asarray(Y, dtype=float)
    Yd = np.asarray(Yd, dtype=float)
    n = Y.shape[0]
    if out is None:
        out = np.empty((n, 2))
    for i in range(n):
        rel_vel(Y[i], Yd[i], par, out=out[i])
    return out
'''

PYX_HEADER = '''# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled dynamics kernels for the planar five-link walker.

Auto-generated by tools/gen_kernels.py -- do not edit by hand.
Mirrors _kernels_py.py; selected at import time by gaitmode.backend.
"""

from libc.math cimport sin, cos, pow

import numpy as np

COMPILED = True


cdef inline double[::1] _as_f64(obj):
    return np.ascontiguousarray(obj, dtype=np.float64)

'''

PYX_EPILOGUE = '''

def observer_terms_batch(Y, Yd, par, out=None):
    """Stack obs_terms_{left,right} over rows of Y/Yd -> (n, 2, 10)."""
    cdef double[:, ::1] yv = np.ascontiguousarray(Y, dtype=np.float64)
    cdef double[:, ::1] ydv = np.ascontiguousarray(Yd, dtype=np.float64)
    cdef double[::1] pv = _as_f64(par)
    cdef Py_ssize_t n = yv.shape[0]
    if out is None:
        out = np.empty((n, 2, 10))
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _obs_terms_left(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 0, 0])
            _obs_terms_right(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 1, 0])
    return out


def rel_vel_batch(Y, Yd, par, out=None):
    """Stack rel_vel over rows of Y/Yd -> (n, 2)."""
    cdef double[:, ::1] yv = np.ascontiguousarray(Y, dtype=np.float64)
    cdef double[:, ::1] ydv = np.ascontiguousarray(Yd, dtype=np.float64)
    cdef double[::1] pv = _as_f64(par)
    cdef Py_ssize_t n = yv.shape[0]
    if out is None:
        out = np.empty((n, 2))
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _rel_vel(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 0])
    return out
'''


def generate(out_dir: Path):
    kernels = derive()
    py_parts = [PY_HEADER]
    pyx_defs = [PYX_HEADER]
    pyx_wrappers = []
    for name, kernel in kernels.items():
        print(f"  emitting {name} ({len(list(kernel[0]))} exprs)")
        py_parts.append(emit_python(name, kernel))
        py_parts.append("\n")
        cdef_src, wrap_src = emit_cython(name, kernel)
        pyx_defs.append(cdef_src)
        pyx_defs.append("\n")
        pyx_wrappers.append(wrap_src)
        pyx_wrappers.append("\n")
    py_src = "\n".join(py_parts) + PY_EPILOGUE
    pyx_src = "\n".join(pyx_defs) + "\n" + "\n".join(pyx_wrappers) + PYX_EPILOGUE
    (out_dir / "_kernels_py.py").write_text(py_src)
    (out_dir / "_speedups.pyx").write_text(pyx_src)
    print(f"wrote {out_dir / '_kernels_py.py'} ({len(py_src)} bytes)")
    print(f"wrote {out_dir / '_speedups.pyx'} ({len(pyx_src)} bytes)")


def check(out_dir: Path) -> int:
    """Numeric validation of the generated pure-Python module."""
    import importlib.util

    import numpy as np

    spec = importlib.util.spec_from_file_location(
        "_kernels_check", out_dir / "_kernels_py.py"
    )
    k = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(k)

    rng = np.random.default_rng(0)
    par = np.concatenate([
        np.ones(5),                      # masses
        np.full(5, 0.5),                 # lengths
        np.full(5, 0.25),                # com offsets
        np.full(5, 1.0 * 0.5**2 / 12),   # rod inertias
        [9.81],
    ])
    failures = []

    def rep(label, err, tol):
        ok = err < tol
        if not ok:
            failures.append(label)
        print(f"    {label}: max err {err:.3e} (tol {tol:g}) {'ok' if ok else 'FAIL'}")

    eps = 1e-6
    errs = {lbl: 0.0 for lbl in [
        "M symmetric", "M translation rows", "G structure", "A identity block",
        "A vs fd(footpos)", "Adot vs fd(A)", "Mdot vs C+C^T", "bias vs C@qd",
        "T vs qd'Mqd/2", "obs vs numpy composition", "vrel base invariance",
    ]}
    for _ in range(40):
        q = rng.normal(0, 0.7, 7)
        qdv = rng.normal(0, 1.0, 7)
        M = k.mass_matrix(q, par)
        C = k.coriolis_matrix(q, qdv, par)
        G = k.gravity_vector(q, par)
        errs["M symmetric"] = max(errs["M symmetric"], np.abs(M - M.T).max())
        errs["M translation rows"] = max(
            errs["M translation rows"],
            abs(M[0, 0] - 5.0), abs(M[1, 1] - 5.0), abs(M[0, 1]),
        )
        errs["G structure"] = max(
            errs["G structure"], abs(G[0]), abs(G[1] - 5 * 9.81)
        )
        for side, jac, jacd, fpos in [
            ("l", k.foot_jac_left, k.foot_jacdot_left, k.foot_pos_left),
            ("r", k.foot_jac_right, k.foot_jacdot_right, k.foot_pos_right),
        ]:
            A = jac(q, par)
            errs["A identity block"] = max(
                errs["A identity block"], np.abs(A[:, :2] - np.eye(2)).max()
            )
            fd = np.empty((2, 7))
            for i in range(7):
                dq = np.zeros(7); dq[i] = eps
                fd[:, i] = (fpos(q + dq, par) - fpos(q - dq, par)) / (2 * eps)
            errs["A vs fd(footpos)"] = max(errs["A vs fd(footpos)"], np.abs(A - fd).max())
            Ad = jacd(q, qdv, par)
            Ad_fd = (jac(q + eps * qdv, par) - jac(q - eps * qdv, par)) / (2 * eps)
            errs["Adot vs fd(A)"] = max(errs["Adot vs fd(A)"], np.abs(Ad - Ad_fd).max())
        Mdot_fd = (k.mass_matrix(q + eps * qdv, par) - k.mass_matrix(q - eps * qdv, par)) / (2 * eps)
        errs["Mdot vs C+C^T"] = max(errs["Mdot vs C+C^T"], np.abs(Mdot_fd - (C + C.T)).max())
        errs["bias vs C@qd"] = max(errs["bias vs C@qd"], np.abs(k.bias_vector(q, qdv, par) - C @ qdv).max())
        T, V = k.energies(q, qdv, par)
        errs["T vs qd'Mqd/2"] = max(errs["T vs qd'Mqd/2"], abs(T - 0.5 * qdv @ M @ qdv))

        # independent composition of the fused observer kernels
        y, ydv = q[2:], qdv[2:]
        for side, jac, jacd, obs in [
            (0, k.foot_jac_left, k.foot_jacdot_left, k.obs_terms_left),
            (1, k.foot_jac_right, k.foot_jacdot_right, k.obs_terms_right),
        ]:
            A = jac(q, par)
            H = np.vstack([-A[:, 2:], np.eye(5)])
            u = H @ ydv
            Ad = jacd(q, u, par)
            Hd = np.vstack([-Ad[:, 2:], np.zeros((5, 5))])
            Mq = k.mass_matrix(q, par)
            Cq = k.coriolis_matrix(q, u, par)
            Gq = k.gravity_vector(q, par)
            p_ref = H.T @ (Mq @ u)
            beta_ref = H.T @ (Cq.T @ u - Gq) + Hd.T @ (Mq @ u)
            got = obs(y, ydv, par)
            err = max(np.abs(got[:5] - p_ref).max(), np.abs(got[5:] - beta_ref).max())
            errs["obs vs numpy composition"] = max(errs["obs vs numpy composition"], err)
        # vrel must ignore base velocity entirely
        u1 = np.concatenate([rng.normal(0, 3, 2), ydv])
        vr = k.rel_vel(y, ydv, par)
        vr_full = (k.foot_jac_left(q, par) - k.foot_jac_right(q, par)) @ u1
        errs["vrel base invariance"] = max(errs["vrel base invariance"], np.abs(vr - vr_full).max())

    tols = {
        "M symmetric": 1e-12, "M translation rows": 1e-12, "G structure": 1e-10,
        "A identity block": 0.0 + 1e-15, "A vs fd(footpos)": 1e-8,
        "Adot vs fd(A)": 1e-8, "Mdot vs C+C^T": 1e-7, "bias vs C@qd": 1e-11,
        "T vs qd'Mqd/2": 1e-10, "obs vs numpy composition": 1e-10,
        "vrel base invariance": 1e-12,
    }
    print("  numeric validation:")
    for lbl, err in errs.items():
        rep(lbl, err, tols[lbl])
    if failures:
        print(f"FAILED: {failures}")
        return 1
    print("  all checks passed")
    return 0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", type=Path,
                    default=Path(__file__).resolve().parent.parent / "src" / "gaitmode")
    ap.add_argument("--check", action="store_true",
                    help="numerically validate the generated Python module")
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    print("deriving kernels ...")
    generate(args.out_dir)
    if args.check:
        sys.exit(check(args.out_dir))


if __name__ == "__main__":
    main()
