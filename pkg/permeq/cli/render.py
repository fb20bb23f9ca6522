"""Plain-text reports for terminal use; --json output bypasses this module."""
from __future__ import annotations

from permeq.models.schemas import (
    B1InstanceOut,
    B2SolutionOut,
    CertificateOut,
    CertifyReport,
    SolutionSetOut,
)


def solution_set(out: SolutionSetOut, empty_reason: str = "") -> str:
    eq = out.equation
    label = "sigma:" if eq.kind == "root" else "alpha:"
    lines = [
        f"equation:  {eq.text}",
        f"{label:<11}{eq.subject}  (n = {eq.degree})",
        f"method:    {out.method}",
        f"solutions: {out.count}",
    ]
    width = len(str(out.count))
    lines.extend(f"  {i:>{width}}  {text}" for i, text in enumerate(out.solutions, start=1))
    if not out.solutions and empty_reason:
        lines.append(f"  none: {empty_reason}")
    return "\n".join(lines)


def _certificate(cert: CertificateOut) -> list[str]:
    head = f"{cert.theorem}  {cert.verdict}"
    if cert.vacuous:
        head += "  (vacuous)"
    lines = [head]
    for p in cert.pairs:
        mark = "ok" if p.passes else "FAIL"
        lines.append(f"    d={p.d} r={p.r} member={p.member} g_d={p.gd} gcd(2^d-1,r)={p.gcd}  {mark}")
    for c in cert.checks:
        relation = "|" if c.divisible else "∤"
        lines.append(f"    a={c.length} p={c.prime}: p {relation} 2^{c.exponent} - 1")
    if cert.failure is not None:
        lines.append(f"    failure: {cert.failure.reason}")
    return lines


def certify_report(report: CertifyReport) -> str:
    lines = [f"alpha:   {report.alpha}  (n = {report.degree})", f"verdict: {report.verdict}"]
    if report.certified_by:
        lines[-1] += f" ({', '.join(report.certified_by)})"
    for cert in report.certificates:
        lines.extend(_certificate(cert))
    return "\n".join(lines)


def b1_instance(out: B1InstanceOut) -> str:
    lines = [
        f"n = {out.n}, p = {out.p}, q = {out.q}  labeling {out.labeling}",
        f"beta: {out.beta}",
        f"y:    {out.y}",
        "verified: beta∘y = y^2∘beta, beta an n-cycle, y of type p^q",
    ]
    if out.transport is not None:
        lines.extend([
            f"target:   {out.transport.target}",
            f"tau:      {out.transport.tau}",
            f"solution: {out.transport.solution}",
        ])
    return "\n".join(lines)


def b2_solution(out: B2SolutionOut) -> str:
    return "\n".join([
        f"n = {out.n} = {out.p}·2^{out.m}, s = {out.s}",
        f"alpha:    {out.alpha}",
        f"solution: {out.solution}",
    ])
