//! Report document model. Every command builds one of these trees; the
//! text and structured renderings are produced from the same tree, so they
//! always carry the same fields in the same order.

use carcass::rational::{format_rational, Rational};

#[derive(Debug, Clone)]
pub enum Value {
    Text(String),
    Int(i64),
    Bool(bool),
    List(Vec<String>),
}

impl Value {
    pub fn rational(r: &Rational) -> Value {
        Value::Text(format_rational(r))
    }

    pub fn rationals<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> Value {
        Value::List(items.into_iter().map(format_rational).collect())
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Text(s) => serde_json::Value::String(s.clone()),
            Value::Int(n) => serde_json::Value::from(*n),
            Value::Bool(b) => serde_json::Value::Bool(*b),
            Value::List(items) => {
                serde_json::Value::Array(items.iter().cloned().map(Into::into).collect())
            }
        }
    }

    fn text(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::List(items) => {
                if items.is_empty() {
                    "(none)".to_string()
                } else {
                    items.join(", ")
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum Item {
    Field(String, Value),
    Section(String, Vec<Item>),
    Table { key: String, columns: Vec<String>, rows: Vec<Vec<String>> },
}

pub fn field(key: &str, value: Value) -> Item {
    Item::Field(key.to_string(), value)
}

pub fn text_field(key: &str, value: impl Into<String>) -> Item {
    Item::Field(key.to_string(), Value::Text(value.into()))
}

pub fn section(key: &str, items: Vec<Item>) -> Item {
    Item::Section(key.to_string(), items)
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(items: Vec<Item>) -> Report {
        Report { items }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        render_items(&self.items, 0, &mut out);
        out
    }

    pub fn json(&self) -> String {
        let mut doc = serde_json::Map::new();
        for item in &self.items {
            insert_item(&mut doc, item);
        }
        let mut rendered = serde_json::to_string_pretty(&serde_json::Value::Object(doc))
            .expect("report trees always serialize");
        rendered.push('\n');
        rendered
    }
}

fn render_items(items: &[Item], indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for item in items {
        match item {
            Item::Field(key, value) => {
                out.push_str(&format!("{pad}{key}: {}\n", value.text()));
            }
            Item::Section(key, children) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_items(children, indent + 1, out);
            }
            Item::Table { key, columns, rows } => {
                out.push_str(&format!("{pad}{key}:\n"));
                let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
                for row in rows {
                    for (i, cell) in row.iter().enumerate() {
                        widths[i] = widths[i].max(cell.len());
                    }
                }
                let render_row = |cells: Vec<&str>| -> String {
                    let mut line = format!("{pad}  ");
                    for (i, cell) in cells.iter().enumerate() {
                        if i > 0 {
                            line.push_str("  ");
                        }
                        line.push_str(&format!("{cell:<width$}", width = widths[i]));
                    }
                    line.trim_end().to_string()
                };
                out.push_str(&render_row(columns.iter().map(String::as_str).collect()));
                out.push('\n');
                for row in rows {
                    out.push_str(&render_row(row.iter().map(String::as_str).collect()));
                    out.push('\n');
                }
            }
        }
    }
}

fn insert_item(doc: &mut serde_json::Map<String, serde_json::Value>, item: &Item) {
    match item {
        Item::Field(key, value) => {
            doc.insert(key.clone(), value.json());
        }
        Item::Section(key, children) => {
            let mut nested = serde_json::Map::new();
            for child in children {
                insert_item(&mut nested, child);
            }
            doc.insert(key.clone(), serde_json::Value::Object(nested));
        }
        Item::Table { key, columns, rows } => {
            let array = rows
                .iter()
                .map(|row| {
                    let mut entry = serde_json::Map::new();
                    for (column, cell) in columns.iter().zip(row) {
                        entry.insert(column.clone(), serde_json::Value::String(cell.clone()));
                    }
                    serde_json::Value::Object(entry)
                })
                .collect();
            doc.insert(key.clone(), serde_json::Value::Array(array));
        }
    }
}
