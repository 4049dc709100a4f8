use chebfib_py::chebfib_module;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(f: impl FnOnce(&Bound<'_, PyModule>)) {
    Python::attach(|py| {
        let m = PyModule::new(py, "chebfib").unwrap();
        chebfib_module(&m).unwrap();
        f(&m);
    });
}

fn run(m: &Bound<'_, PyModule>, code: &str) {
    let globals = PyDict::new(m.py());
    globals.set_item("cf", m).unwrap();
    let code = std::ffi::CString::new(code).unwrap();
    m.py().run(&code, Some(&globals), None).unwrap_or_else(|e| panic!("{e}"));
}

#[test]
fn sequences_and_fractions() {
    with_module(|m| {
        run(
            m,
            r#"
from fractions import Fraction
assert cf.a138573(10) == [0, 1, 2, 5, 16, 45, 130, 377, 1088, 3145]
assert cf.fib(100) == 354224848179261915075
assert cf.lucas(-3) == -4
assert cf.binom(10, 3) == 120
assert cf.coeff_c(3, 1) + cf.coeff_d(3, 1) == cf.binom(4, 2)
assert cf.cheb_coeffs("T", 4) == [1, 0, -8, 0, 8]
assert cf.format_fraction(Fraction(-6, 4)) == "-3/2"
"#,
        );
    });
}

#[test]
fn elements() {
    with_module(|m| {
        run(
            m,
            r#"
a, b = cf.Elem.golden()
r5 = cf.Elem.q5(0, 1)
assert (a - b) == r5
assert (a * b) == cf.Elem(-1)
assert ((a ** 10 - b ** 10) / r5).to_fraction() == 55
assert str(cf.Elem("1/2 + 3*rt(5)")) == "1/2 + 3*rt(5)"
assert cf.cheb_eval("T", 3, "1/2") == cf.Elem(-1)
try:
    cf.Elem(1) / cf.Elem(0)
    raise AssertionError("no error")
except ZeroDivisionError:
    pass
"#,
        );
    });
}

#[test]
fn identities() {
    with_module(|m| {
        run(
            m,
            r#"
ids = [e[0] for e in cf.catalog()]
assert "ex5.1" in ids and len(ids) == len(set(ids))
l, r = cf.evaluate("ex5.1", {"n": 3})
assert l == r == cf.Elem(9)
out = cf.verify("ex5.1", "quick", {"n": (1, 4)})
assert [o["status"] for o in out] == ["pass"] * 4
assert cf.poly_identity_check("lem8", 12)
try:
    cf.verify("no.such.id")
    raise AssertionError("no error")
except ValueError:
    pass
assert cf.chu_guo_lhs(5, 2) == cf.chu_guo_closed(5, 2)
"#,
        );
    });
}
