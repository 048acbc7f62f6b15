mod support;

use nipval_cli::ExitCode;
use support::{data_path, json_of, nipval, schema_errors, GOLDEN, NEGATIVE};

#[test]
fn classify_reports_the_failed_clause() {
    let out = nipval(&["classify", "hahn(triv(Falg(5)),Z)"]);
    assert_eq!(out.code, ExitCode::Refuted);
    assert!(
        out.stdout.contains("IP: clause 2a.ii - value group not 5-divisible"),
        "{}",
        out.stdout
    );
}

#[test]
fn classify_golden_and_negative_exit_codes() {
    for (text, case) in GOLDEN {
        let out = nipval(&["classify", text]);
        assert_eq!(out.code, ExitCode::Success, "{text}");
        assert!(out.stdout.contains(&format!("NIP (case {case})")), "{text}: {}", out.stdout);
    }
    for (text, clause) in NEGATIVE {
        let out = nipval(&["classify", text, "--json"]);
        assert_eq!(out.code, ExitCode::Refuted, "{text}");
        let doc = json_of(&out);
        let failed = doc["result"]["verdict"]["failed_clauses"].as_array().unwrap();
        assert!(failed.iter().any(|c| c == clause), "{text}: {failed:?}");
    }
}

#[test]
fn explain_prints_the_trail() {
    let out = nipval(&["classify", "Qp(5,1,1)", "--explain"]);
    assert!(out.stdout.contains("[2b.ii] true"), "{}", out.stdout);
    assert!(out.stdout.contains("[audit] true"), "{}", out.stdout);
}

#[test]
fn non_henselian_input_gets_necessary_conditions() {
    let out = nipval(&["classify", "abstract{res=F(5),group=Z,vp=1,hens=F,dl=T}", "--json"]);
    assert_eq!(out.code, ExitCode::Inconclusive);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["mode"], "necessary");
    assert_eq!(doc["result"]["necessary"]["refuted"], false);

    let out = nipval(&["classify", "abstract{res=Falg(5),group=Z,hens=F}"]);
    assert_eq!(out.code, ExitCode::Refuted);
    assert!(out.stdout.starts_with("abstract{"));
}

#[test]
fn unknown_flags_give_exit_two() {
    let out = nipval(&["classify", "hahn(triv(field{char=0,perfect=T}),Z)"]);
    assert_eq!(out.code, ExitCode::Inconclusive);
    assert!(out.stdout.contains("Unknown: missing Kv.nip"), "{}", out.stdout);
}

#[test]
fn decompose_example() {
    let out = nipval(&["decompose", "hahn(Qp(5,1,1),Q)", "--json"]);
    assert_eq!(out.code, ExitCode::Success);
    let doc = json_of(&out);
    let r = &doc["result"];
    assert_eq!(r["delta_p"], "trivial");
    assert_eq!(r["delta_0"], "Z");
    assert_eq!(r["quotient_discrete"], true);
    assert_eq!(r["chain"][0]["group"], "Q");
    assert!(schema_errors("decompose", &doc).is_empty());

    let text = nipval(&["decompose", "cohen(hahn(triv(SCF(3,1)),Q))"]).stdout;
    assert!(text.contains("K --[trivial]--> Kv_0 --[Z, discrete]--> Kv_p --[Q]--> Kv"), "{text}");
}

#[test]
fn decompose_rejects_equal_characteristic() {
    let out = nipval(&["decompose", "hahn(triv(ACF0),Q)"]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stderr.contains("expected mixed characteristic"), "{}", out.stderr);
}

#[test]
fn shelah_on_trivially_valued_real_closed_field() {
    let out = nipval(&["shelah", "triv(RCF)"]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out
        .stdout
        .contains("residue-level: real closed, RCVF family applies only with nontrivial v"));
}

#[test]
fn shelah_and_theory_need_nip_input() {
    let out = nipval(&["shelah", "hahn(triv(Falg(5)),Z)"]);
    assert_eq!(out.code, ExitCode::Refuted);
    let out = nipval(&["theory", "hahn(triv(Falg(5)),Z)", "--json"]);
    assert_eq!(out.code, ExitCode::Refuted);
    assert!(json_of(&out)["result"]["tag"].is_null());
}

#[test]
fn theory_tags() {
    let out = nipval(&["theory", "hahn(triv(ACF0),Q)"]);
    assert!(out.stdout.contains("theory: T(ACF0,Q)"), "{}", out.stdout);
    assert!(out.stdout.contains("complete: true"));
    let out = nipval(&["theory", "cohen(SCF(3,2))"]);
    assert!(out.stdout.contains("theory: T_2(SCF(3,2),Z,1)"), "{}", out.stdout);
    assert!(out.stdout.contains("degree 1 of C(SCF(3,2))"), "{}", out.stdout);
}

#[test]
fn audit_verb() {
    let out = nipval(&["audit", "hahn(hahn(triv(SCF(3,1)),Z),Z)"]);
    assert_eq!(out.code, ExitCode::Refuted);
    assert!(out.stdout.contains("audit failed at cuts [1, 2]"), "{}", out.stdout);
    assert_eq!(nipval(&["audit", "cohen(SCF(3,1))"]).code, ExitCode::Success);
}

#[test]
fn parse_errors_carry_positions() {
    let out = nipval(&["classify", "hahn(triv(ACF0),", "--json"]);
    assert_eq!(out.code, ExitCode::Parse);
    let doc = json_of(&out);
    assert_eq!(doc["error"]["kind"], "syntax");
    assert_eq!(doc["error"]["line"], 1);
    assert_eq!(doc["error"]["column"], 17);
    assert!(schema_errors("classify", &doc).is_empty());

    let out = nipval(&["classify", "tame(F(5),Q,1)"]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stderr.contains("Kaplansky"), "{}", out.stderr);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(nipval(&["classify"]).code, ExitCode::Usage);
    assert_eq!(nipval(&["classify", "Qp(5,1,1)", "--bogus"]).code, ExitCode::Usage);
    assert_eq!(nipval(&["frobnicate"]).code, ExitCode::Usage);
    assert_eq!(nipval(&[]).code, ExitCode::Usage);
    let out = nipval(&["classify", "--batch", "/nonexistent/descriptors.txt"]);
    assert_eq!(out.code, ExitCode::Usage);
    assert_eq!(nipval(&["--help"]).code, ExitCode::Success);
}

#[test]
fn input_may_be_a_file() {
    let dir = std::env::temp_dir().join(format!("nipval-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let one = dir.join("one.vf");
    std::fs::write(&one, "hahn(\n  triv(ACF0),\n  Q)\n").unwrap();
    let out = nipval(&["classify", one.to_str().unwrap()]);
    assert_eq!(out.code, ExitCode::Success, "{}", out.stderr);

    std::fs::write(&one, "hahn(\n  triv(ACF0),\n  W)\n").unwrap();
    let out = nipval(&["classify", one.to_str().unwrap()]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stderr.contains("line 3, column 3"), "{}", out.stderr);

    let batch = dir.join("batch.txt");
    let mut lines = vec!["# golden corpus".to_string(), String::new()];
    lines.extend(GOLDEN.iter().map(|(t, _)| t.to_string()));
    std::fs::write(&batch, lines.join("\n")).unwrap();
    let out = nipval(&["classify", "--batch", batch.to_str().unwrap(), "--json"]);
    assert_eq!(out.code, ExitCode::Success);
    let doc = json_of(&out);
    let entries = doc["result"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    assert_eq!(entries[0]["line"], 3);
    assert!(schema_errors("classify", &doc).is_empty());

    lines.push("hahn(triv(Falg(5)),Z)".into());
    lines.push("Qp(4,1,1)".into());
    std::fs::write(&batch, lines.join("\n")).unwrap();
    let out = nipval(&["classify", "--batch", batch.to_str().unwrap()]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stdout.contains("[line 12] IP: clause 2a.ii") || out.stdout.contains("[line 12] hahn"));
    assert!(out.stdout.contains("[line 13] error"), "{}", out.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_series_and_inverse() {
    let out = nipval(&["eval", "(1 + t)*(1 - t)", "--coeffs", "F(5)", "--json"]);
    assert_eq!(out.code, ExitCode::Success);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["series"], "1 + 4*t^2");
    assert!(schema_errors("eval", &doc).is_empty());

    let out = nipval(&["eval", "t^(1/2)*t^(1/2)", "--group", "Q", "--coeffs", "F(5)"]);
    assert!(out.stdout.starts_with("t\n"), "{}", out.stdout);

    let out = nipval(&["eval", "1 - t", "--coeffs", "F(5)", "--invert", "--order", "3", "--json"]);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["series"], "1 + t + t^2 + t^3");
    assert_eq!(doc["result"]["error_valuation"], "4");
    assert!(schema_errors("eval", &doc).is_empty());

    let out = nipval(&["eval", "t^(-1) + 2", "--json"]);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["value"]["valuation"], "-1");
    assert_eq!(doc["result"]["value"]["residue"], "0");

    let out = nipval(&["eval", "0", "--invert"]);
    assert_eq!(out.code, ExitCode::Parse);
}

#[test]
fn eval_lift() {
    let out = nipval(&[
        "eval", "X^2 - 1 - t", "--lift", "1", "--order", "6", "--coeffs", "Q", "--json",
    ]);
    assert_eq!(out.code, ExitCode::Success, "{}", out.stderr);
    let doc = json_of(&out);
    assert_eq!(
        doc["result"]["series"],
        "1 + 1/2*t - 1/8*t^2 + 1/16*t^3 - 5/128*t^4 + 7/256*t^5 - 21/1024*t^6"
    );
    assert_eq!(doc["result"]["doubles_each_step"], true);
    assert!(schema_errors("eval", &doc).is_empty());

    let out = nipval(&["eval", "X^2 - t", "--lift", "0", "--coeffs", "F(5)"]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stderr.contains("multiple root"), "{}", out.stderr);
}

#[test]
fn oracle_catalogue_and_case_file() {
    let out = nipval(&["oracle", "--json"]);
    assert_eq!(out.code, ExitCode::Success);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["cases"].as_array().unwrap().len(), 14);
    assert!(schema_errors("oracle", &doc).is_empty());

    let file = data_path("oracle-cases.json");
    let cases: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert!(schema_errors("oracle-cases", &cases).is_empty());
    let path = file.to_str().unwrap();
    assert_eq!(nipval(&["oracle", path]).code, ExitCode::Success);
    let out = nipval(&["oracle", path, "--precision", "1", "--json"]);
    assert_eq!(out.code, ExitCode::Inconclusive);
    let doc = json_of(&out);
    let statuses: Vec<&str> = doc["result"]["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap())
        .collect();
    assert!(statuses.contains(&"inconclusive"));
    assert!(schema_errors("oracle", &doc).is_empty());
}

#[test]
fn oracle_rejects_bad_case_files() {
    let dir = std::env::temp_dir().join(format!("nipval-oracle-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("cases.json");
    std::fs::write(&f, r#"[{"name":"x","base":{"kind":"hahn","p":5}}]"#).unwrap();
    assert_eq!(nipval(&["oracle", f.to_str().unwrap()]).code, ExitCode::Parse);
    std::fs::write(
        &f,
        r#"[{"name":"wild","base":{"kind":"hahn","p":5},"ext":{"kind":"radical","n":5}}]"#,
    )
    .unwrap();
    let out = nipval(&["oracle", f.to_str().unwrap()]);
    assert_eq!(out.code, ExitCode::Parse);
    assert!(out.stderr.contains("wild") || out.stderr.contains("5"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_code_values() {
    let table = [
        (ExitCode::Success, 0),
        (ExitCode::Refuted, 1),
        (ExitCode::Inconclusive, 2),
        (ExitCode::Usage, 64),
        (ExitCode::Parse, 65),
        (ExitCode::Internal, 70),
    ];
    for (c, n) in table {
        assert_eq!(c.code(), n);
    }
}
