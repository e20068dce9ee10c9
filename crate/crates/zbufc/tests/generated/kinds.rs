// @generated by zbufc. Do not edit.

#[allow(dead_code, non_camel_case_types, non_snake_case, clippy::all)]
pub mod accept {
    pub mod kinds {
        const __ZBUF_SCHEMA: &str = "namespace accept.kinds;\n\ntable Vec3 {\n    x: float;\n    y: float;\n    z: float;\n}\n\ntable Camera {\n    origin: Vec3;\n    lookAt: Vec3;\n    up: Vec3;\n}\n\ntable Scalars {\n    b: bool;\n    i8v: int8;\n    i16v: int16;\n    i32v: int32;\n    i64v: int64;\n    i128v: int128;\n    u8v: uint8;\n    u16v: uint16;\n    u32v: uint32;\n    u64v: uint64;\n    u128v: uint128;\n    f: float;\n    d: double;\n}\n\ntable Image {\n    format: uint8;\n    data: [uint8];\n}\n\ntable Containers {\n    name: string;\n    raw: [uint8];\n    pts: [Vec3];\n    grid: [[int16:2]:3];\n    flags: [bool:3];\n    wide: [uint128];\n    reals: [double];\n    bytes4: [uint8:4];\n}\n\ntable Scene {\n    title: string;\n    camera: Camera;\n    image: Image;\n    tags: [uint32];\n}\n\ntable Deep {\n    scene: Scene;\n    extra: Containers;\n    flag: bool;\n    cams: [Camera];\n}\n\ntable Empty {\n}\n";

        fn __zbuf_type(name: &str) -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
            static DOCUMENT: ::std::sync::OnceLock<::zbuf::SchemaDocument> = ::std::sync::OnceLock::new();
            DOCUMENT
                .get_or_init(|| ::zbuf::parse_schema(__ZBUF_SCHEMA).expect("embedded schema is valid"))
                .type_def(name)
                .expect("embedded schema defines every generated type")
        }

        /// `accept.kinds.Vec3`
        #[derive(Clone, PartialEq)]
        pub struct Vec3 {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Vec3 {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0xd4ae59b5706bafb2329a40f26e486dac);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Vec3")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Vec3`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `x: float`
            pub fn x(&self) -> ::core::primitive::f32 {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_x(&mut self, value: ::core::primitive::f32) {
                self.buffer.set_field(0, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `y: float`
            pub fn y(&self) -> ::core::primitive::f32 {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_y(&mut self, value: ::core::primitive::f32) {
                self.buffer.set_field(1, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `z: float`
            pub fn z(&self) -> ::core::primitive::f32 {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_z(&mut self, value: ::core::primitive::f32) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Vec3 {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Vec3 {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Vec3")
                    .field("x", &self.x())
                    .field("y", &self.y())
                    .field("z", &self.z())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Vec3 {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Vec3 {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Vec3::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Camera`
        #[derive(Clone, PartialEq)]
        pub struct Camera {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Camera {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x087b17cdd1f6932b555e53404b721168);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Camera")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Camera`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `origin: Vec3`
            pub fn origin(&self) -> Vec3 {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_origin(&mut self, value: Vec3) {
                self.buffer.set_field(0, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `origin` in place; the change is stored when the guard drops.
            pub fn origin_mut(&mut self) -> ::zbuf::NestedMut<'_, Vec3> {
                ::zbuf::NestedMut::new(&mut self.buffer, 0)
            }

            /// `lookAt: Vec3`
            pub fn look_at(&self) -> Vec3 {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_look_at(&mut self, value: Vec3) {
                self.buffer.set_field(1, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `lookAt` in place; the change is stored when the guard drops.
            pub fn look_at_mut(&mut self) -> ::zbuf::NestedMut<'_, Vec3> {
                ::zbuf::NestedMut::new(&mut self.buffer, 1)
            }

            /// `up: Vec3`
            pub fn up(&self) -> Vec3 {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_up(&mut self, value: Vec3) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `up` in place; the change is stored when the guard drops.
            pub fn up_mut(&mut self) -> ::zbuf::NestedMut<'_, Vec3> {
                ::zbuf::NestedMut::new(&mut self.buffer, 2)
            }
        }

        impl ::core::default::Default for Camera {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Camera {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Camera")
                    .field("origin", &self.origin())
                    .field("lookAt", &self.look_at())
                    .field("up", &self.up())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Camera {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Camera {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Camera::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Scalars`
        #[derive(Clone, PartialEq)]
        pub struct Scalars {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Scalars {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0xf768aaa04900645c23914da2b7eb4e42);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Scalars")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Scalars`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `b: bool`
            pub fn b(&self) -> ::core::primitive::bool {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_b(&mut self, value: ::core::primitive::bool) {
                self.buffer.set_field(0, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `i8v: int8`
            pub fn i8v(&self) -> ::core::primitive::i8 {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_i8v(&mut self, value: ::core::primitive::i8) {
                self.buffer.set_field(1, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `i16v: int16`
            pub fn i16v(&self) -> ::core::primitive::i16 {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_i16v(&mut self, value: ::core::primitive::i16) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `i32v: int32`
            pub fn i32v(&self) -> ::core::primitive::i32 {
                ::zbuf::FieldType::from_value(self.buffer.field(3)).expect("field matches its schema kind")
            }

            pub fn set_i32v(&mut self, value: ::core::primitive::i32) {
                self.buffer.set_field(3, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `i64v: int64`
            pub fn i64v(&self) -> ::core::primitive::i64 {
                ::zbuf::FieldType::from_value(self.buffer.field(4)).expect("field matches its schema kind")
            }

            pub fn set_i64v(&mut self, value: ::core::primitive::i64) {
                self.buffer.set_field(4, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `i128v: int128`
            pub fn i128v(&self) -> ::core::primitive::i128 {
                ::zbuf::FieldType::from_value(self.buffer.field(5)).expect("field matches its schema kind")
            }

            pub fn set_i128v(&mut self, value: ::core::primitive::i128) {
                self.buffer.set_field(5, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `u8v: uint8`
            pub fn u8v(&self) -> ::core::primitive::u8 {
                ::zbuf::FieldType::from_value(self.buffer.field(6)).expect("field matches its schema kind")
            }

            pub fn set_u8v(&mut self, value: ::core::primitive::u8) {
                self.buffer.set_field(6, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `u16v: uint16`
            pub fn u16v(&self) -> ::core::primitive::u16 {
                ::zbuf::FieldType::from_value(self.buffer.field(7)).expect("field matches its schema kind")
            }

            pub fn set_u16v(&mut self, value: ::core::primitive::u16) {
                self.buffer.set_field(7, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `u32v: uint32`
            pub fn u32v(&self) -> ::core::primitive::u32 {
                ::zbuf::FieldType::from_value(self.buffer.field(8)).expect("field matches its schema kind")
            }

            pub fn set_u32v(&mut self, value: ::core::primitive::u32) {
                self.buffer.set_field(8, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `u64v: uint64`
            pub fn u64v(&self) -> ::core::primitive::u64 {
                ::zbuf::FieldType::from_value(self.buffer.field(9)).expect("field matches its schema kind")
            }

            pub fn set_u64v(&mut self, value: ::core::primitive::u64) {
                self.buffer.set_field(9, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `u128v: uint128`
            pub fn u128v(&self) -> ::core::primitive::u128 {
                ::zbuf::FieldType::from_value(self.buffer.field(10)).expect("field matches its schema kind")
            }

            pub fn set_u128v(&mut self, value: ::core::primitive::u128) {
                self.buffer.set_field(10, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `f: float`
            pub fn f(&self) -> ::core::primitive::f32 {
                ::zbuf::FieldType::from_value(self.buffer.field(11)).expect("field matches its schema kind")
            }

            pub fn set_f(&mut self, value: ::core::primitive::f32) {
                self.buffer.set_field(11, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `d: double`
            pub fn d(&self) -> ::core::primitive::f64 {
                ::zbuf::FieldType::from_value(self.buffer.field(12)).expect("field matches its schema kind")
            }

            pub fn set_d(&mut self, value: ::core::primitive::f64) {
                self.buffer.set_field(12, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Scalars {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Scalars {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Scalars")
                    .field("b", &self.b())
                    .field("i8v", &self.i8v())
                    .field("i16v", &self.i16v())
                    .field("i32v", &self.i32v())
                    .field("i64v", &self.i64v())
                    .field("i128v", &self.i128v())
                    .field("u8v", &self.u8v())
                    .field("u16v", &self.u16v())
                    .field("u32v", &self.u32v())
                    .field("u64v", &self.u64v())
                    .field("u128v", &self.u128v())
                    .field("f", &self.f())
                    .field("d", &self.d())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Scalars {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Scalars {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Scalars::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Image`
        #[derive(Clone, PartialEq)]
        pub struct Image {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Image {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x9c42fab442178532776a922bd93d022c);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Image")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Image`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `format: uint8`
            pub fn format(&self) -> ::core::primitive::u8 {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_format(&mut self, value: ::core::primitive::u8) {
                self.buffer.set_field(0, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `data: [uint8]`
            pub fn data(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_data(&mut self, value: &[::core::primitive::u8]) {
                self.buffer.set_field(1, ::zbuf::Value::Bytes(value.to_vec())).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Image {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Image {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Image")
                    .field("format", &self.format())
                    .field("data", &self.data())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Image {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Image {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Image::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Containers`
        #[derive(Clone, PartialEq)]
        pub struct Containers {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Containers {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x325be1ae4b1047227036747b58aa39c5);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Containers")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Containers`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `name: string`
            pub fn name(&self) -> ::std::string::String {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_name(&mut self, value: &::core::primitive::str) {
                self.buffer.set_field(0, ::zbuf::Value::String(value.to_owned())).expect("object stays below 4 GiB");
            }

            /// `raw: [uint8]`
            pub fn raw(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_raw(&mut self, value: &[::core::primitive::u8]) {
                self.buffer.set_field(1, ::zbuf::Value::Bytes(value.to_vec())).expect("object stays below 4 GiB");
            }

            /// `pts: [Vec3]`
            pub fn pts(&self) -> ::std::vec::Vec<Vec3> {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_pts(&mut self, value: ::std::vec::Vec<Vec3>) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `grid: [[int16:2]:3]`
            pub fn grid(&self) -> [[::core::primitive::i16; 2]; 3] {
                ::zbuf::FieldType::from_value(self.buffer.field(3)).expect("field matches its schema kind")
            }

            pub fn set_grid(&mut self, value: [[::core::primitive::i16; 2]; 3]) {
                self.buffer.set_field(3, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `flags: [bool:3]`
            pub fn flags(&self) -> [::core::primitive::bool; 3] {
                ::zbuf::FieldType::from_value(self.buffer.field(4)).expect("field matches its schema kind")
            }

            pub fn set_flags(&mut self, value: [::core::primitive::bool; 3]) {
                self.buffer.set_field(4, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `wide: [uint128]`
            pub fn wide(&self) -> ::std::vec::Vec<::core::primitive::u128> {
                ::zbuf::FieldType::from_value(self.buffer.field(5)).expect("field matches its schema kind")
            }

            pub fn set_wide(&mut self, value: ::std::vec::Vec<::core::primitive::u128>) {
                self.buffer.set_field(5, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `reals: [double]`
            pub fn reals(&self) -> ::std::vec::Vec<::core::primitive::f64> {
                ::zbuf::FieldType::from_value(self.buffer.field(6)).expect("field matches its schema kind")
            }

            pub fn set_reals(&mut self, value: ::std::vec::Vec<::core::primitive::f64>) {
                self.buffer.set_field(6, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `bytes4: [uint8:4]`
            pub fn bytes4(&self) -> [::core::primitive::u8; 4] {
                ::zbuf::FieldType::from_value(self.buffer.field(7)).expect("field matches its schema kind")
            }

            pub fn set_bytes4(&mut self, value: [::core::primitive::u8; 4]) {
                self.buffer.set_field(7, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Containers {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Containers {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Containers")
                    .field("name", &self.name())
                    .field("raw", &self.raw())
                    .field("pts", &self.pts())
                    .field("grid", &self.grid())
                    .field("flags", &self.flags())
                    .field("wide", &self.wide())
                    .field("reals", &self.reals())
                    .field("bytes4", &self.bytes4())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Containers {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Containers {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Containers::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Scene`
        #[derive(Clone, PartialEq)]
        pub struct Scene {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Scene {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x6420cf6066dea8440124afbff825fed7);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Scene")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Scene`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `title: string`
            pub fn title(&self) -> ::std::string::String {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_title(&mut self, value: &::core::primitive::str) {
                self.buffer.set_field(0, ::zbuf::Value::String(value.to_owned())).expect("object stays below 4 GiB");
            }

            /// `camera: Camera`
            pub fn camera(&self) -> Camera {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_camera(&mut self, value: Camera) {
                self.buffer.set_field(1, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `camera` in place; the change is stored when the guard drops.
            pub fn camera_mut(&mut self) -> ::zbuf::NestedMut<'_, Camera> {
                ::zbuf::NestedMut::new(&mut self.buffer, 1)
            }

            /// `image: Image`
            pub fn image(&self) -> Image {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_image(&mut self, value: Image) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `image` in place; the change is stored when the guard drops.
            pub fn image_mut(&mut self) -> ::zbuf::NestedMut<'_, Image> {
                ::zbuf::NestedMut::new(&mut self.buffer, 2)
            }

            /// `tags: [uint32]`
            pub fn tags(&self) -> ::std::vec::Vec<::core::primitive::u32> {
                ::zbuf::FieldType::from_value(self.buffer.field(3)).expect("field matches its schema kind")
            }

            pub fn set_tags(&mut self, value: ::std::vec::Vec<::core::primitive::u32>) {
                self.buffer.set_field(3, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Scene {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Scene {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Scene")
                    .field("title", &self.title())
                    .field("camera", &self.camera())
                    .field("image", &self.image())
                    .field("tags", &self.tags())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Scene {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Scene {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Scene::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Deep`
        #[derive(Clone, PartialEq)]
        pub struct Deep {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Deep {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0xbb1dec78a35c1a91b5819004b8f8463d);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Deep")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Deep`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            /// `scene: Scene`
            pub fn scene(&self) -> Scene {
                ::zbuf::FieldType::from_value(self.buffer.field(0)).expect("field matches its schema kind")
            }

            pub fn set_scene(&mut self, value: Scene) {
                self.buffer.set_field(0, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `scene` in place; the change is stored when the guard drops.
            pub fn scene_mut(&mut self) -> ::zbuf::NestedMut<'_, Scene> {
                ::zbuf::NestedMut::new(&mut self.buffer, 0)
            }

            /// `extra: Containers`
            pub fn extra(&self) -> Containers {
                ::zbuf::FieldType::from_value(self.buffer.field(1)).expect("field matches its schema kind")
            }

            pub fn set_extra(&mut self, value: Containers) {
                self.buffer.set_field(1, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// Edits `extra` in place; the change is stored when the guard drops.
            pub fn extra_mut(&mut self) -> ::zbuf::NestedMut<'_, Containers> {
                ::zbuf::NestedMut::new(&mut self.buffer, 1)
            }

            /// `flag: bool`
            pub fn flag(&self) -> ::core::primitive::bool {
                ::zbuf::FieldType::from_value(self.buffer.field(2)).expect("field matches its schema kind")
            }

            pub fn set_flag(&mut self, value: ::core::primitive::bool) {
                self.buffer.set_field(2, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }

            /// `cams: [Camera]`
            pub fn cams(&self) -> ::std::vec::Vec<Camera> {
                ::zbuf::FieldType::from_value(self.buffer.field(3)).expect("field matches its schema kind")
            }

            pub fn set_cams(&mut self, value: ::std::vec::Vec<Camera>) {
                self.buffer.set_field(3, ::zbuf::FieldType::into_value(value)).expect("object stays below 4 GiB");
            }
        }

        impl ::core::default::Default for Deep {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Deep {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Deep")
                    .field("scene", &self.scene())
                    .field("extra", &self.extra())
                    .field("flag", &self.flag())
                    .field("cams", &self.cams())
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Deep {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Deep {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Deep::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        /// `accept.kinds.Empty`
        #[derive(Clone, PartialEq)]
        pub struct Empty {
            buffer: ::zbuf::ObjectBuffer,
        }

        impl Empty {
            pub const DIGEST: ::zbuf::TypeDigest = ::zbuf::TypeDigest::from_u128(0x016de7499d09111a344ed6eb7260f6cb);

            pub fn type_def() -> &'static ::std::sync::Arc<::zbuf::TypeDef> {
                __zbuf_type("Empty")
            }

            pub fn new() -> Self {
                Self {
                    buffer: ::zbuf::ObjectBuffer::allocate(Self::type_def()),
                }
            }

            /// Wraps `buffer` if it holds a `accept.kinds.Empty`.
            pub fn from_buffer(buffer: ::zbuf::ObjectBuffer) -> ::core::option::Option<Self> {
                (buffer.digest() == Self::DIGEST).then_some(Self { buffer })
            }

            pub fn buffer(&self) -> &::zbuf::ObjectBuffer {
                &self.buffer
            }

            pub fn into_buffer(self) -> ::zbuf::ObjectBuffer {
                self.buffer
            }

            pub fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            pub fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer = ::zbuf::ObjectBuffer::from_binary(Self::type_def(), data)?;
                ::core::result::Result::Ok(())
            }

            pub fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            pub fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }
        }

        impl ::core::default::Default for Empty {
            fn default() -> Self {
                Self::new()
            }
        }

        impl ::core::fmt::Debug for Empty {
            fn fmt(&self, f: &mut ::core::fmt::Formatter<'_>) -> ::core::fmt::Result {
                f.debug_struct("Empty")
                    .finish()
            }
        }

        impl ::zbuf::FieldType for Empty {
            fn from_value(value: ::zbuf::Value) -> ::core::option::Option<Self> {
                match value {
                    ::zbuf::Value::Object(buffer) => Self::from_buffer(buffer),
                    _ => ::core::option::Option::None,
                }
            }

            fn into_value(self) -> ::zbuf::Value {
                ::zbuf::Value::Object(self.buffer)
            }
        }

        impl ::zbuf::Serializable for Empty {
            fn type_digest(&self) -> ::zbuf::TypeDigest {
                Self::DIGEST
            }

            fn qualified_name(&self) -> ::std::string::String {
                Self::type_def().qualified_name()
            }

            fn to_binary(&self) -> ::std::vec::Vec<::core::primitive::u8> {
                self.buffer.to_binary()
            }

            fn from_binary(&mut self, data: &[::core::primitive::u8]) -> ::core::result::Result<(), ::zbuf::Error> {
                Empty::from_binary(self, data)
            }

            fn to_json(&self) -> ::std::string::String {
                self.buffer.to_json()
            }

            fn from_json(&mut self, json: &::core::primitive::str) -> ::core::result::Result<(), ::zbuf::Error> {
                self.buffer.from_json(json)
            }

            fn json_schema(&self) -> ::std::string::String {
                ::zbuf::json_schema(Self::type_def())
            }
        }

        #[cfg(test)]
        mod __zbuf_tests {
            #[test]
            fn digests_match_schema() {
                assert_eq!(super::Vec3::DIGEST, super::Vec3::type_def().digest());
                assert_eq!(super::Camera::DIGEST, super::Camera::type_def().digest());
                assert_eq!(super::Scalars::DIGEST, super::Scalars::type_def().digest());
                assert_eq!(super::Image::DIGEST, super::Image::type_def().digest());
                assert_eq!(super::Containers::DIGEST, super::Containers::type_def().digest());
                assert_eq!(super::Scene::DIGEST, super::Scene::type_def().digest());
                assert_eq!(super::Deep::DIGEST, super::Deep::type_def().digest());
                assert_eq!(super::Empty::DIGEST, super::Empty::type_def().digest());
            }
        }
    }
}
