use classifier::RuleReport;

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn plain(r: &RuleReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("threefold: {}\n", r.threefold));
    out.push_str(&format!("c1 <= {}, {}\n", r.c1, r.rank_regime.as_str()));
    out.push_str(&format!("admissible c2: {}\n", join(&r.admissible_c2)));
    out.push_str(&format!("unresolved: {}\n", if r.unresolved.is_empty() { "none".into() } else { join(&r.unresolved) }));
    if !r.pairs.is_empty() {
        let p: Vec<String> = r.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        out.push_str(&format!("pairs: {}\n", p.join(" ")));
    }
    for (k, (lo, hi)) in &r.rank_windows {
        out.push_str(&format!("rank window {k}: [{lo},{hi}]\n"));
    }
    if !r.disabled.is_empty() {
        out.push_str(&format!("disabled rules: {}\n", r.disabled.join(" ")));
    }
    out.push_str("witnesses:\n");
    for (c2, names) in &r.witnesses {
        out.push_str(&format!("  {c2}: {}\n", if names.is_empty() { "-".to_string() } else { names.join(", ") }));
    }
    out
}

/// A table whose columns are padded to the widest cell.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}{}", " ".repeat(width[i] - c.chars().count())))
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push_str(&line(width.iter().map(|w| "-".repeat(*w)).collect()));
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

pub fn markdown(r: &RuleReport) -> String {
    let mut out = format!(
        "# {} (c1 <= {}, {})\n\nAdmissible c2: {}\n\n",
        r.threefold,
        r.c1,
        r.rank_regime.as_str(),
        join(&r.admissible_c2)
    );
    let rows: Vec<Vec<String>> = r
        .admissible_c2
        .iter()
        .map(|c2| {
            vec![
                c2.to_string(),
                r.witnesses.get(c2).map(|w| w.join(", ")).unwrap_or_default(),
                if r.unresolved.contains(c2) { "yes".into() } else { "no".into() },
            ]
        })
        .collect();
    out.push_str(&table(&["c2", "witnesses", "unresolved"], &rows));
    out.push_str("\n## Rules\n\n");
    let rows: Vec<Vec<String>> = r
        .rules
        .iter()
        .map(|e| {
            vec![
                e.id.clone(),
                e.kind.as_str().to_string(),
                e.fired.to_string(),
                e.failed.to_string(),
                e.paper_ref.replace('|', "\\|"),
            ]
        })
        .collect();
    out.push_str(&table(&["rule", "kind", "fired", "failed", "reference"], &rows));
    let notes: Vec<String> = r
        .rules
        .iter()
        .flat_map(|e| e.annotations.iter().map(move |a| format!("- {}: {a}", e.id)))
        .collect();
    if !notes.is_empty() {
        out.push_str("\n## Annotations\n\n");
        out.push_str(&notes.join("\n"));
        out.push('\n');
    }
    out
}
