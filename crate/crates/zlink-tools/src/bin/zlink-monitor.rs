//! Watches zlink traffic: lists announced publishers, or prints one line per
//! received message.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use base64::Engine;
use clap::builder::NonEmptyStringValueParser;
use clap::{ArgGroup, Parser};
use zbuf::TypeDigest;
use zlink::beacon::BeaconListener;
use zlink::{Receiver, Session, Subscriber, Target, Uri};

/// Payload bytes shown per message.
const PREFIX_LEN: usize = 24;
const LIST_TIME: Duration = Duration::from_secs(5);

#[derive(Parser)]
#[command(name = "zlink-monitor", about = "Inspect zlink publishers and messages")]
#[command(group(ArgGroup::new("source").args(["session", "connect", "list"]).required(true)))]
struct Args {
    /// Print `session<TAB>uri` for each publisher announced in the next 5 s.
    #[arg(long)]
    list: bool,
    /// Follow publishers of this session.
    #[arg(long, value_parser = NonEmptyStringValueParser::new())]
    session: Option<String>,
    /// Follow the publisher at this address.
    #[arg(long)]
    connect: Option<Uri>,
    /// Type digest to print, as 32 hex digits. Repeatable.
    #[arg(long = "digest", value_name = "HEX", required_unless_present = "list")]
    digests: Vec<TypeDigest>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let stop = Arc::new(AtomicBool::new(false));
    let flag = stop.clone();
    if let Err(e) = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst)) {
        eprintln!("zlink-monitor: {e}");
        return ExitCode::FAILURE;
    }
    let result = if args.list { list(&stop) } else { follow(args, &stop) };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zlink-monitor: {e}");
            ExitCode::FAILURE
        }
    }
}

fn list(stop: &AtomicBool) -> Result<(), zlink::Error> {
    let mut listener = BeaconListener::bind()?;
    let deadline = Instant::now() + LIST_TIME;
    let mut seen = BTreeSet::new();
    while let Some(left) = deadline.checked_duration_since(Instant::now()) {
        if stop.load(Ordering::SeqCst) {
            break;
        }
        if let Some((beacon, uri)) = listener.recv(left.min(Duration::from_millis(100)))? {
            if seen.insert((beacon.session.clone(), uri.to_string())) {
                println!("{}\t{uri}", beacon.session);
            }
        }
    }
    Ok(())
}

fn follow(args: Args, stop: &AtomicBool) -> Result<(), zlink::Error> {
    let target = match (args.connect, args.session) {
        (Some(uri), _) => Target::Uri(uri),
        (None, Some(name)) => Target::Session(Session::Named(name)),
        (None, None) => unreachable!("clap requires a source"),
    };
    let subscriber = Subscriber::new(target)?;
    for digest in args.digests {
        subscriber.subscribe_raw(digest, move |payload| {
            let shown = &payload[..payload.len().min(PREFIX_LEN)];
            let prefix = base64::engine::general_purpose::STANDARD.encode(shown);
            println!("{digest}\t{}\t{prefix}", payload.len());
        })?;
    }
    while !stop.load(Ordering::SeqCst) {
        subscriber.receive(100);
    }
    Ok(())
}
