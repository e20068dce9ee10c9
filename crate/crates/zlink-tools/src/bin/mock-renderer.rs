//! Demo render service: serves a camera and the frame rendered from it over
//! HTTP, and follows camera updates published in its session.

use std::io::Write;
use std::process::ExitCode;
use std::sync::{Arc, Mutex};

use clap::Parser;
use zlink::{Access, HttpServer, Receiver, Session, Subscriber, Uri};
use zlink_tools::demo::{Camera, Frame};

#[derive(Parser)]
#[command(name = "mock-renderer", about = "Serve a camera and a rendered frame over HTTP")]
struct Args {
    /// HTTP address, e.g. `:0` or `tcp://127.0.0.1:8080`.
    #[arg(long, default_value = ":0")]
    http: Uri,
    /// Session to follow for camera updates; defaults to `$ZLINK_SESSION` or the user name.
    #[arg(long)]
    session: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mock-renderer: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: Args) -> Result<(), zlink::Error> {
    let session = args.session.and_then(Session::named).unwrap_or_default();
    let camera = Arc::new(Mutex::new(Camera::new()));
    let frame = Arc::new(Mutex::new(Frame::new()));
    let rerender = {
        let (camera, frame) = (camera.clone(), frame.clone());
        move || {
            let image = zlink_tools::render(&camera.lock().unwrap());
            *frame.lock().unwrap() = image;
        }
    };
    rerender();

    let subscriber = Subscriber::new(session)?;
    subscriber.subscribe_with(&camera, rerender.clone())?;
    let server = HttpServer::in_group(Some(args.http), subscriber.group())?;
    server.register_with(&camera, Access::ReadWrite, rerender)?;
    server.register(&frame, Access::Read)?;

    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "{}", zlink_tools::announcement(server.uri()))?;
    stdout.flush()?;
    drop(stdout);

    loop {
        server.receive(100);
    }
}
