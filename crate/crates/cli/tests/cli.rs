use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn hatlab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hatlab"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hatlab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn torus_vertex(x: usize, y: usize) -> usize {
    (x % 5) * 5 + (y % 5)
}

/// The 5 x 5 torus, with translations and the coordinate swap.
fn write_torus_inputs() -> (PathBuf, PathBuf) {
    let mut edges = Vec::new();
    for x in 0..5 {
        for y in 0..5 {
            let v = torus_vertex(x, y);
            for w in [torus_vertex(x + 1, y), torus_vertex(x, y + 1)] {
                edges.push((v.min(w), v.max(w)));
            }
        }
    }
    let mut graph = format!("25 {}\n", edges.len());
    for (u, v) in edges {
        graph.push_str(&format!("{u} {v}\n"));
    }
    let image = |f: &dyn Fn(usize, usize) -> usize| -> String {
        let images: Vec<usize> = (0..25).map(|v| f(v / 5, v % 5)).collect();
        let mut seen = [false; 25];
        let mut out = String::new();
        for start in 0..25 {
            if seen[start] || images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = images[p];
            }
            let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("({})", body.join(" ")));
        }
        out
    };
    let sub = format!(
        "25 3\n{}\n{}\n{}\n",
        image(&|x, y| torus_vertex(x + 1, y)),
        image(&|x, y| torus_vertex(x, y + 1)),
        image(&|x, y| torus_vertex(y, x)),
    );
    let g = scratch("torus.txt");
    let s = scratch("torus_sub.txt");
    fs::write(&g, graph).unwrap();
    fs::write(&s, sub).unwrap();
    (g, s)
}

#[test]
fn aut_reports_torus_order() {
    let (graph, _) = write_torus_inputs();
    let out_file = scratch("torus_aut.txt");
    let out = hatlab().arg("aut").arg(&graph).arg("--out").arg(&out_file).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("order 200"), "{stdout}");
    let gens = fs::read_to_string(out_file).unwrap();
    assert!(gens.starts_with("25 "));
}

#[test]
fn altgraph_on_torus() {
    let (graph, sub) = write_torus_inputs();
    let group = scratch("torus_group.txt");
    let out = hatlab().arg("aut").arg(&graph).arg("--out").arg(&group).output().unwrap();
    assert!(out.status.success());
    let json = scratch("alt.json");
    let out = hatlab()
        .args(["altgraph"])
        .arg(&graph)
        .arg(&group)
        .arg(&sub)
        .arg("--json")
        .arg(&json)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    let cycles = doc["cycleCount"].as_u64().unwrap();
    let radius = doc["radius"].as_u64().unwrap();
    assert_eq!(cycles * radius, 25);
    assert!(doc["altAutOrder"].as_str().is_some());
}

#[test]
fn pairsearch_a4s_json() {
    let json = scratch("a4s.json");
    let out = hatlab()
        .args(["pairsearch", "--amalgam", "A4s", "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(doc["resultCount"], 2);
    for r in doc["results"].as_array().unwrap() {
        assert_eq!(r["n"], 6);
        assert_eq!(r["quadrupleSignature"], serde_json::json!(["S5", "F5", "A4", "C2"]));
        assert_eq!(r["verified"], true);
    }
}

#[test]
fn example_43_passes() {
    let out = hatlab().args(["example", "4.3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn example_42_rejects_bad_witness() {
    let w = scratch("bad_witness.json");
    fs::write(
        &w,
        r#"{"degree":72,"x":"(0 1 2 3)","generator":"manual","seed":0,"budgetSeconds":null,"examined":0,"normalizerOrder":"0"}"#,
    )
    .unwrap();
    let out = hatlab().args(["example", "4.2", "--witness"]).arg(&w).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_inputs_are_errors() {
    let out = hatlab().args(["example", "9.9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = hatlab().args(["pairsearch", "--amalgam", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
