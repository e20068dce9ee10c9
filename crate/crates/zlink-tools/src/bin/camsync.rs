//! Camera synchronization between instances of one session.
//!
//! Each instance runs the classic loop: apply a local camera change and
//! publish it, or else poll for changes from peers, then render. Local
//! changes come from a script given on the command line. On exit the final
//! camera is printed as JSON.

use std::process::ExitCode;
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use clap::Parser;
use zlink::{Publisher, Receiver, Session, Subscriber};
use zlink_tools::demo::Camera;

#[derive(Parser)]
#[command(name = "camsync", about = "Keep a camera in sync across instances of a session")]
struct Args {
    /// Session to join; defaults to `$ZLINK_SESSION` or the user name.
    #[arg(long)]
    session: Option<String>,
    /// Move the camera origin once, this many ms after startup.
    #[arg(long, value_name = "MS", requires = "origin")]
    update_at_ms: Option<u64>,
    /// New origin for the scripted update, as `x,y,z`.
    #[arg(long, value_parser = zlink_tools::parse_vec3, allow_hyphen_values = true)]
    origin: Option<[f32; 3]>,
    /// Total run time.
    #[arg(long, value_name = "MS", default_value_t = 3000)]
    duration_ms: u64,
    /// Wait up to 5 s for this many other instances before starting the clock.
    #[arg(long, default_value_t = 0)]
    peers: usize,
}

const FRAME_TIME: Duration = Duration::from_millis(10);
const PEER_WAIT: Duration = Duration::from_secs(5);

/// Scripted stand-in for user input.
struct Script {
    start: Instant,
    update: Option<(Duration, [f32; 3])>,
}

impl Script {
    /// Applies the pending update once its time has come.
    fn update_camera(&mut self, camera: &mut Camera) -> bool {
        match self.update {
            Some((at, [x, y, z])) if self.start.elapsed() >= at => {
                let mut origin = camera.origin_mut();
                origin.set_x(x);
                origin.set_y(y);
                origin.set_z(z);
                self.update = None;
                true
            }
            _ => false,
        }
    }
}

fn render_frame(camera: &Camera) {
    let _ = zlink_tools::render(camera);
    thread::sleep(FRAME_TIME);
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("camsync: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: Args) -> Result<String, zlink::Error> {
    let session = args.session.and_then(Session::named).unwrap_or_default();
    let camera = Arc::new(Mutex::new(Camera::new()));
    let publisher = Publisher::new(None, session.clone())?;
    let subscriber = Subscriber::new(session)?;
    subscriber.subscribe(&camera)?;

    // Every instance also hears itself.
    let expected = args.peers + 1;
    let deadline = Instant::now() + PEER_WAIT;
    while Instant::now() < deadline
        && (subscriber.connected_peers().len() < expected || publisher.connection_count() < expected)
    {
        thread::sleep(FRAME_TIME);
    }

    let start = Instant::now();
    let mut script = Script {
        start,
        update: args.update_at_ms.map(Duration::from_millis).zip(args.origin),
    };
    let run_time = Duration::from_millis(args.duration_ms);
    while start.elapsed() < run_time {
        let changed = script.update_camera(&mut camera.lock().unwrap());
        if changed {
            publisher.publish(&*camera.lock().unwrap());
        } else {
            subscriber.receive(0);
        }
        render_frame(&camera.lock().unwrap());
    }
    let json = camera.lock().unwrap().to_json();
    Ok(json)
}
