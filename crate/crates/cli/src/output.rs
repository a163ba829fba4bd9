use std::io::Write;

use clap::ValueEnum;
use core_partitions::{BetaSet, CoreSequence, FamilyStats, Partition};
use serde::Serialize;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn json_line<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn join(items: &[u64]) -> String {
    items.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub fn sequence_json(seq: &CoreSequence, partition: &Partition) -> serde_json::Value {
    serde_json::json!({
        "t": seq.t(),
        "m": seq.m(),
        "family": seq.family(),
        "sequence": seq.entries(),
        "partition": partition,
    })
}

/// One line of a streamed enumeration.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Record {
    Partition { partition: Partition, size: u64 },
    Beta { beta: BetaSet, size: u64 },
    Size { size: u64 },
    Sequence { sequence: Vec<u64>, partition: Partition, size: u64 },
}

impl Record {
    pub fn partition(p: &Partition) -> Result<Self, Failure> {
        Ok(Record::Partition { partition: p.clone(), size: p.size()? })
    }

    pub fn beta(b: &BetaSet) -> Result<Self, Failure> {
        Ok(Record::Beta { beta: b.clone(), size: b.size()? })
    }

    pub fn size(size: u64) -> Self {
        Record::Size { size }
    }

    pub fn sequence(seq: &CoreSequence, p: &Partition) -> Result<Self, Failure> {
        Ok(Record::Sequence {
            sequence: seq.entries().to_vec(),
            partition: p.clone(),
            size: p.size()?,
        })
    }

    fn fields(&self) -> Vec<String> {
        match self {
            Record::Partition { partition, size } => vec![partition.to_string(), size.to_string()],
            Record::Beta { beta, size } => vec![beta.to_string(), size.to_string()],
            Record::Size { size } => vec![size.to_string()],
            Record::Sequence { sequence, partition, size } => {
                vec![join(sequence), partition.to_string(), size.to_string()]
            }
        }
    }

    /// Plain text: the object itself, or tab-separated columns for sequences.
    fn text(&self) -> String {
        match self {
            Record::Partition { partition, .. } => partition.to_string(),
            Record::Beta { beta, .. } => beta.to_string(),
            Record::Size { size } => size.to_string(),
            Record::Sequence { .. } => self.fields().join("\t"),
        }
    }
}

enum Sink<'a> {
    Plain(&'a mut dyn Write, Format),
    Csv(Box<csv::Writer<&'a mut dyn Write>>),
}

/// Writes records as text lines, JSON lines, or CSV with a header row.
pub struct RecordSink<'a> {
    sink: Sink<'a>,
}

impl<'a> RecordSink<'a> {
    pub fn new(out: &'a mut dyn Write, format: Format, header: &[&str]) -> Result<Self, Failure> {
        let sink = match format {
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(header)?;
                Sink::Csv(Box::new(writer))
            }
            other => Sink::Plain(out, other),
        };
        Ok(RecordSink { sink })
    }

    pub fn write(&mut self, record: &Record) -> Result<(), Failure> {
        match &mut self.sink {
            Sink::Plain(out, Format::Json) => json_line(*out, record)?,
            Sink::Plain(out, _) => writeln!(out, "{}", record.text())?,
            Sink::Csv(writer) => writer.write_record(record.fields())?,
        }
        Ok(())
    }

    pub fn finish(self) -> Result<(), Failure> {
        if let Sink::Csv(mut writer) = self.sink {
            writer.flush()?;
        }
        Ok(())
    }
}

pub fn stats(out: &mut dyn Write, stats: &FamilyStats, format: Format) -> Result<(), Failure> {
    let rows = [
        ("count", stats.count.to_string()),
        ("largest_size", stats.largest_size.to_string()),
        ("maximizer_count", stats.maximizer_count.to_string()),
        ("total_size", stats.total_size.to_string()),
        ("average_size", stats.average_size.to_string()),
    ];
    match format {
        Format::Json => json_line(out, stats)?,
        Format::Text => {
            for (name, value) in rows {
                writeln!(out, "{} {}", name, value)?;
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(rows.iter().map(|(name, _)| *name))?;
            writer.write_record(rows.iter().map(|(_, value)| value.as_str()))?;
            writer.flush()?;
        }
    }
    Ok(())
}
