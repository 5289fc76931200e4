//! JSON reports with a fixed key order.

use serde_json::{json, Map, Value};

use crate::dsl::Workspace;
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct TaskReport {
    pub task: String,
    pub inputs: Value,
    pub result: Value,
    pub certificate: Option<Value>,
    pub warnings: Vec<String>,
}

impl TaskReport {
    pub fn new(task: &str, inputs: Value, result: Value) -> TaskReport {
        TaskReport {
            task: task.to_string(),
            inputs,
            result,
            certificate: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_certificate(mut self, c: Value) -> TaskReport {
        self.certificate = Some(c);
        self
    }

    pub fn with_warning(mut self, w: impl Into<String>) -> TaskReport {
        self.warnings.push(w.into());
        self
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("task".into(), json!(self.task));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("result".into(), self.result.clone());
        if let Some(c) = &self.certificate {
            m.insert("certificate".into(), c.clone());
        }
        if !self.warnings.is_empty() {
            m.insert("warnings".into(), json!(self.warnings));
        }
        Value::Object(m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Meta {
    pub field: String,
    pub quiver: String,
    pub truncation_cap: usize,
    pub truncation_level: usize,
    pub exact: bool,
}

impl Meta {
    pub fn of(ws: &Workspace) -> Meta {
        let b = ws.algebra.basis();
        Meta {
            field: ws.field().to_string(),
            quiver: ws.name.clone(),
            truncation_cap: ws.algebra.truncation_cap(),
            truncation_level: b.level(),
            exact: b.is_exact(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub meta: Option<Meta>,
    pub tasks: Vec<TaskReport>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        if let Some(meta) = &self.meta {
            m.insert(
                "meta".into(),
                json!({
                    "field": meta.field,
                    "quiver": meta.quiver,
                    "truncation": {
                        "cap": meta.truncation_cap,
                        "level": meta.truncation_level,
                        "exact": meta.exact,
                    },
                }),
            );
        }
        m.insert(
            "tasks".into(),
            Value::Array(self.tasks.iter().map(TaskReport::to_json).collect()),
        );
        Value::Object(m)
    }
}

pub fn serialize_report(report: &Report) -> String {
    serde_json::to_string(&report.to_json()).expect("json values serialize")
}

pub fn serialize_report_pretty(report: &Report) -> String {
    serde_json::to_string_pretty(&report.to_json()).expect("json values serialize")
}

/// Integers become JSON numbers when they fit in `i64`; fractions become strings.
pub fn scalar_json(s: &Scalar) -> Value {
    match s.as_i64() {
        Some(v) => json!(v),
        None => json!(s.to_string()),
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(scalar_json).collect()))
            .collect(),
    )
}

pub fn matrices_json(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(serialize_report(&Report::default()), r#"{"tasks":[]}"#);
    }

    #[test]
    fn task_field_order() {
        let r = Report {
            meta: None,
            tasks: vec![TaskReport::new("hom", json!({"M": "P2", "N": "P3"}), json!(1))
                .with_certificate(json!({"basis": []}))],
        };
        assert_eq!(
            serialize_report(&r),
            r#"{"tasks":[{"task":"hom","inputs":{"M":"P2","N":"P3"},"result":1,"certificate":{"basis":[]}}]}"#
        );
    }
}
