//! Structural validator for the JSON reports.
//!
//! The checks enforce the stability contract: every field of a report is
//! present on every run, sections not computed are `null` rather than
//! missing, and no undocumented field ever appears. The test suites round
//! trip real command output through these functions.

use serde_json::{Map, Value};

type Check = fn(&Value, &str) -> Result<(), String>;

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, String> {
    v.as_object()
        .ok_or_else(|| format!("{path}: expected an object"))
}

fn keys_exactly(map: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<(), String> {
    for k in keys {
        if !map.contains_key(*k) {
            return Err(format!("{path}: missing field {k}"));
        }
    }
    for k in map.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(format!("{path}: unexpected field {k}"));
        }
    }
    Ok(())
}

fn string(v: &Value, path: &str) -> Result<(), String> {
    if v.is_string() {
        Ok(())
    } else {
        Err(format!("{path}: expected a string"))
    }
}

fn boolean(v: &Value, path: &str) -> Result<(), String> {
    if v.is_boolean() {
        Ok(())
    } else {
        Err(format!("{path}: expected a boolean"))
    }
}

fn count(v: &Value, path: &str) -> Result<(), String> {
    if v.is_u64() {
        Ok(())
    } else {
        Err(format!("{path}: expected a nonnegative integer"))
    }
}

fn array_of(v: &Value, path: &str, item: Check) -> Result<(), String> {
    let items = v
        .as_array()
        .ok_or_else(|| format!("{path}: expected an array"))?;
    for (k, entry) in items.iter().enumerate() {
        item(entry, &format!("{path}[{k}]"))?;
    }
    Ok(())
}

fn counts(v: &Value, path: &str) -> Result<(), String> {
    array_of(v, path, count)
}

fn strings(v: &Value, path: &str) -> Result<(), String> {
    array_of(v, path, string)
}

fn nullable(v: &Value, path: &str, inner: Check) -> Result<(), String> {
    if v.is_null() {
        Ok(())
    } else {
        inner(v, path)
    }
}

// ---- Report sections ----

fn tool(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["name", "version"])?;
    string(&map["name"], &format!("{path}.name"))?;
    string(&map["version"], &format!("{path}.version"))
}

fn pair_entry(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["left", "right", "c", "linear", "constant"])?;
    string(&map["left"], &format!("{path}.left"))?;
    string(&map["right"], &format!("{path}.right"))?;
    string(&map["c"], &format!("{path}.c"))?;
    strings(&map["linear"], &format!("{path}.linear"))?;
    string(&map["constant"], &format!("{path}.constant"))
}

fn diagnostic(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["kind", "message"])?;
    string(&map["kind"], &format!("{path}.kind"))?;
    string(&map["message"], &format!("{path}.message"))
}

fn shape(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["valid", "pairs", "diagnostics"])?;
    boolean(&map["valid"], &format!("{path}.valid"))?;
    array_of(&map["pairs"], &format!("{path}.pairs"), pair_entry)?;
    array_of(&map["diagnostics"], &format!("{path}.diagnostics"), diagnostic)
}

fn flags(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    let names = [
        "constant",
        "bijective",
        "pre_commutative",
        "quasi_commutative",
        "semi_commutative",
        "pre_koszul",
        "homogeneous_pre_koszul",
    ];
    keys_exactly(map, path, &names)?;
    for name in names {
        boolean(&map[name], &format!("{path}.{name}"))?;
    }
    Ok(())
}

fn pbw(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(
        map,
        path,
        &["certified", "obstruction_count", "witness", "rules"],
    )?;
    boolean(&map["certified"], &format!("{path}.certified"))?;
    count(&map["obstruction_count"], &format!("{path}.obstruction_count"))?;
    nullable(&map["witness"], &format!("{path}.witness"), string)?;
    strings(&map["rules"], &format!("{path}.rules"))
}

fn refuted_at(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["i", "j", "dim"])?;
    count(&map["i"], &format!("{path}.i"))?;
    count(&map["j"], &format!("{path}.j"))?;
    count(&map["dim"], &format!("{path}.dim"))
}

fn koszul(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(
        map,
        path,
        &["verdict", "homogeneous", "route", "refuted_at", "max_i", "max_j"],
    )?;
    string(&map["verdict"], &format!("{path}.verdict"))?;
    nullable(&map["homogeneous"], &format!("{path}.homogeneous"), boolean)?;
    nullable(&map["route"], &format!("{path}.route"), string)?;
    nullable(&map["refuted_at"], &format!("{path}.refuted_at"), refuted_at)?;
    count(&map["max_i"], &format!("{path}.max_i"))?;
    count(&map["max_j"], &format!("{path}.max_j"))
}

fn ext(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["max_i", "max_j", "trusted", "dims"])?;
    count(&map["max_i"], &format!("{path}.max_i"))?;
    count(&map["max_j"], &format!("{path}.max_j"))?;
    boolean(&map["trusted"], &format!("{path}.trusted"))?;
    array_of(&map["dims"], &format!("{path}.dims"), counts)
}

fn pairing(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(
        map,
        path,
        &["holds", "checked_to", "dims", "dual_dims", "first_failure"],
    )?;
    boolean(&map["holds"], &format!("{path}.holds"))?;
    count(&map["checked_to"], &format!("{path}.checked_to"))?;
    counts(&map["dims"], &format!("{path}.dims"))?;
    counts(&map["dual_dims"], &format!("{path}.dual_dims"))?;
    nullable(&map["first_failure"], &format!("{path}.first_failure"), count)
}

fn hilbert(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["dims", "valid_to"])?;
    counts(&map["dims"], &format!("{path}.dims"))?;
    count(&map["valid_to"], &format!("{path}.valid_to"))
}

fn gr_comparison(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["matched", "checked_to", "gr_dims", "b_dims"])?;
    boolean(&map["matched"], &format!("{path}.matched"))?;
    count(&map["checked_to"], &format!("{path}.checked_to"))?;
    counts(&map["gr_dims"], &format!("{path}.gr_dims"))?;
    counts(&map["b_dims"], &format!("{path}.b_dims"))
}

fn deformation(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(
        map,
        path,
        &["cond_i", "cond_j", "b_certified", "verdict", "gr_hilbert"],
    )?;
    boolean(&map["cond_i"], &format!("{path}.cond_i"))?;
    boolean(&map["cond_j"], &format!("{path}.cond_j"))?;
    boolean(&map["b_certified"], &format!("{path}.b_certified"))?;
    string(&map["verdict"], &format!("{path}.verdict"))?;
    gr_comparison(&map["gr_hilbert"], &format!("{path}.gr_hilbert"))
}

fn params(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    for (name, value) in map {
        string(value, &format!("{path}.{name}"))?;
    }
    Ok(())
}

/// Validates the report emitted by `classify`, `analyze`, and `deform`.
pub fn validate_analysis(v: &Value) -> Result<(), String> {
    let map = obj(v, "report")?;
    keys_exactly(
        map,
        "report",
        &[
            "tool",
            "command",
            "algebra",
            "generators",
            "params",
            "shape",
            "flags",
            "pbw",
            "s_counts",
            "koszul",
            "ext",
            "pairing",
            "hilbert",
            "homogeneous_hilbert",
            "deformation",
            "notes",
        ],
    )?;
    tool(&map["tool"], "report.tool")?;
    string(&map["command"], "report.command")?;
    let command = map["command"].as_str().unwrap_or_default();
    if !["classify", "analyze", "deform"].contains(&command) {
        return Err(format!("report.command: unknown command {command:?}"));
    }
    string(&map["algebra"], "report.algebra")?;
    strings(&map["generators"], "report.generators")?;
    params(&map["params"], "report.params")?;
    nullable(&map["shape"], "report.shape", shape)?;
    nullable(&map["flags"], "report.flags", flags)?;
    nullable(&map["pbw"], "report.pbw", pbw)?;
    nullable(&map["s_counts"], "report.s_counts", counts)?;
    nullable(&map["koszul"], "report.koszul", koszul)?;
    nullable(&map["ext"], "report.ext", ext)?;
    nullable(&map["pairing"], "report.pairing", pairing)?;
    nullable(&map["hilbert"], "report.hilbert", hilbert)?;
    nullable(&map["homogeneous_hilbert"], "report.homogeneous_hilbert", hilbert)?;
    nullable(&map["deformation"], "report.deformation", deformation)?;
    strings(&map["notes"], "report.notes")
}

fn table_row(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    let names = [
        "algebra",
        "constant",
        "bijective",
        "pre_commutative",
        "quasi_commutative",
        "semi_commutative",
    ];
    keys_exactly(map, path, &names)?;
    string(&map["algebra"], &format!("{path}.algebra"))?;
    for name in &names[1..] {
        boolean(&map[*name], &format!("{path}.{name}"))?;
    }
    Ok(())
}

fn expectation(v: &Value, path: &str) -> Result<(), String> {
    let map = obj(v, path)?;
    keys_exactly(map, path, &["path", "matched", "mismatches"])?;
    string(&map["path"], &format!("{path}.path"))?;
    boolean(&map["matched"], &format!("{path}.matched"))?;
    strings(&map["mismatches"], &format!("{path}.mismatches"))
}

/// Validates the report emitted by `table`.
pub fn validate_table(v: &Value) -> Result<(), String> {
    let map = obj(v, "report")?;
    keys_exactly(
        map,
        "report",
        &["tool", "selector", "columns", "rows", "skipped", "expectation"],
    )?;
    tool(&map["tool"], "report.tool")?;
    string(&map["selector"], "report.selector")?;
    strings(&map["columns"], "report.columns")?;
    if map["columns"]
        .as_array()
        .map(|cols| cols.iter().filter_map(Value::as_str).collect::<Vec<_>>())
        != Some(vec!["C", "B", "P", "QC", "SC"])
    {
        return Err("report.columns: expected C, B, P, QC, SC".to_string());
    }
    array_of(&map["rows"], "report.rows", table_row)?;
    strings(&map["skipped"], "report.skipped")?;
    nullable(&map["expectation"], "report.expectation", expectation)
}
