use serde_json::{Map, Value};

/// Ordered key/value report plus violations. Printed line by line, or as a
/// JSON object with a `violations` array.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn violation(&mut self, v: impl ToString) {
        self.violations.push(v.to_string());
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut map = Map::new();
            for (k, v) in &self.fields {
                map.insert(k.clone(), v.clone());
            }
            map.insert("violations".into(), self.violations.clone().into());
            let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {}\n", plain(v)));
        }
        for v in &self.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(plain).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut r = Report::new();
        r.field("dim", 2)
            .field("blocks", vec![1, 1])
            .field("name", "x");
        r.field("radical_dim", Value::Null);
        r.violation("P3: a");
        assert_eq!(
            r.render(false),
            "dim: 2\nblocks: [1, 1]\nname: x\nradical_dim: -\nviolation: P3: a\n"
        );
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["blocks"], serde_json::json!([1, 1]));
        assert_eq!(v["violations"][0], "P3: a");
    }
}
