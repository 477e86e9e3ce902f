"""Linkage of ideals, attached primes and Cohen-Macaulay tests over Q[x1..xn].

Every function returns the parsed JSON document of the matching command.
"""

import json

from ._linkalg import SCHEMA_VERSION, emit_session
from ._linkalg import run as _run
from ._linkalg import run_session as _run_session


class LinkalgError(RuntimeError):
    def __init__(self, code, payload):
        super().__init__(payload.get("error", {}).get("message", "linkalg failed"))
        self.code = code
        self.payload = payload


class BudgetExceeded(LinkalgError):
    pass


def run(*args):
    """Run a command given as argv words. Raises on nonzero exit."""
    code, out, _ = _run([str(a) for a in args])
    payload = json.loads(out) if out.strip().startswith("{") else {"text": out}
    if code == 2:
        raise BudgetExceeded(code, payload)
    if code != 0:
        raise LinkalgError(code, payload)
    return payload


def _opts(**kw):
    out = []
    for k, v in kw.items():
        if v is None or v is False:
            continue
        flag = "--" + k.replace("_", "-")
        if isinstance(v, (list, tuple)):
            v = ",".join(str(x) for x in v)
        out += [flag] if v is True else [flag, v]
    return out


def gb(ring, ideal, lex=False):
    return run("gb", *_opts(ring=ring, ideal=ideal, lex=lex))


def depth(ring, ideal):
    return run("depth", *_opts(ring=ring, ideal=ideal))


def ass(ring, ideal):
    return run("ass", *_opts(ring=ring, ideal=ideal))["ass"]


def grade(ring, a, module=None):
    return run("grade", *_opts(ring=ring, a=a, module=module))["grade"]


def check_linked(ring, a, b, I, module=None):
    return run("linkage", "check", *_opts(ring=ring, a=a, b=b, I=I, module=module))


def link_of(ring, a, I, module=None):
    return run("linkage", "link-of", *_opts(ring=ring, a=a, I=I, module=module))


def att_top(ring, a, module=None):
    return run("att-top", *_opts(ring=ring, a=a, module=module))["att"]


def verify(target, random=20, vars=3, maxdeg=2, seed=1, jobs=1, module=None):
    return run("verify", target, *_opts(random=random, vars=vars, maxdeg=maxdeg, seed=seed, jobs=jobs, module=module))


def run_session(text):
    return json.loads(_run_session(text))


__all__ = [
    "SCHEMA_VERSION",
    "BudgetExceeded",
    "LinkalgError",
    "ass",
    "att_top",
    "check_linked",
    "depth",
    "emit_session",
    "gb",
    "grade",
    "link_of",
    "run",
    "run_session",
    "verify",
]
