//! Shared pieces of the zlink command-line tools: generated types for the
//! demo and tide schemas, the mock renderer's image function, and the launch
//! announcement.

include!(concat!(env!("OUT_DIR"), "/demo.rs"));
include!(concat!(env!("OUT_DIR"), "/tide.rs"));

use zlink::Uri;

/// Side length of the mock renderer's square frame.
pub const FRAME_SIZE: u32 = 16;

/// Prefix of the line a service prints once its HTTP server is bound.
pub const ANNOUNCEMENT_PREFIX: &str = "HTTP-SERVER ";

/// Maps one camera coordinate to a color channel:
/// `round(|c| * 255) mod 256`, with non-finite input mapped to 0.
pub fn channel(coordinate: f32) -> u8 {
    let scaled = (f64::from(coordinate).abs() * 255.0).round();
    if !scaled.is_finite() {
        return 0;
    }
    (scaled % 256.0) as u8
}

/// The frame for a camera: a single color taken from its origin.
pub fn render(camera: &demo::Camera) -> demo::Frame {
    let origin = camera.origin();
    let pixel = [channel(origin.x()), channel(origin.y()), channel(origin.z())];
    let mut frame = demo::Frame::new();
    frame.set_width(FRAME_SIZE);
    frame.set_height(FRAME_SIZE);
    frame.set_rgb(&pixel.repeat((FRAME_SIZE * FRAME_SIZE) as usize));
    frame
}

/// The launch announcement for a server bound at `uri`. A wildcard host is
/// announced as loopback so the line is directly connectable.
pub fn announcement(uri: &Uri) -> String {
    let host = if uri.is_unspecified() { "127.0.0.1" } else { uri.host() };
    format!("{ANNOUNCEMENT_PREFIX}{}", Uri::new(host, uri.port()))
}

/// Parses `x,y,z`.
pub fn parse_vec3(text: &str) -> Result<[f32; 3], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [x, y, z] = parts[..] else {
        return Err(format!("expected x,y,z, got {text:?}"));
    };
    let parse = |s: &str| s.parse::<f32>().map_err(|e| format!("{s:?}: {e}"));
    Ok([parse(x)?, parse(y)?, parse(z)?])
}
