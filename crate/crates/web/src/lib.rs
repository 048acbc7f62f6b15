//! WebAssembly bindings for the demo page in `www/`. Each export runs the
//! matching `nipval` subcommand and returns its JSON envelope as a string,
//! so the page and the command line always agree.

use nipval_cli::run;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn envelope(args: &[&str]) -> String {
    let out = run(std::iter::once("nipval").chain(args.iter().copied()));
    if out.stdout.trim_start().starts_with('{') {
        return out.stdout;
    }
    // Argument errors are reported by the parser on stderr only.
    json!({
        "schema": 1,
        "command": args.first().copied().unwrap_or(""),
        "exit": out.code.code(),
        "error": { "kind": "usage", "message": out.stderr.trim() },
    })
    .to_string()
}

/// Classify a descriptor such as `hahn(triv(Falg(5)),Q)`.
#[wasm_bindgen]
pub fn classify(descriptor: &str) -> String {
    envelope(&["classify", descriptor, "--json", "--explain"])
}

/// Standard decomposition of a mixed-characteristic descriptor.
#[wasm_bindgen]
pub fn decompose(descriptor: &str) -> String {
    envelope(&["decompose", descriptor, "--json"])
}

/// Lift the residue root `root` of `poly` (a polynomial in `X` with series
/// coefficients in `t`) over `coeffs` (`Q` or `F(q)`) to the given order.
#[wasm_bindgen]
pub fn lift(poly: &str, root: &str, coeffs: &str, order: u32) -> String {
    let order = order.to_string();
    envelope(&[
        "eval", poly, "--lift", root, "--coeffs", coeffs, "--order", &order, "--json",
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn classify_returns_the_envelope() {
        let v = parse(&classify("Qp(5,1,1)"));
        assert_eq!(v["exit"], 0);
        assert_eq!(v["result"]["verdict"]["case"], "b");
        let v = parse(&classify("hahn(triv(ACF0),"));
        assert_eq!(v["exit"], 65);
        assert_eq!(v["error"]["kind"], "syntax");
    }

    #[test]
    fn decompose_and_lift() {
        let v = parse(&decompose("hahn(Qp(5,1,1),Q)"));
        assert_eq!(v["result"]["delta_0"], "Z");
        let v = parse(&lift("X^2 - 1 - t", "1", "F(5)", 4));
        assert_eq!(v["result"]["doubles_each_step"], true);
        // binom(1/2, k) mod 5 is 1, 3, 3, 1, 0.
        assert_eq!(v["result"]["series"], "1 + 3*t + 3*t^2 + t^3");
    }

    #[test]
    fn bad_arguments_still_give_json() {
        let v = parse(&lift("X - 1", "2", "Q", 3));
        assert_eq!(v["exit"], 65);
        let v = parse(&lift("X - 1", "1", "R", 3));
        assert_eq!(v["exit"], 65);
        let v = parse(&lift("--bogus", "1", "Q", 3));
        assert_eq!(v["exit"], 64);
        assert_eq!(v["error"]["kind"], "usage");
        assert!(v["error"]["message"].as_str().is_some());
    }
}
