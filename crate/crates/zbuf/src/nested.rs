use std::ops::{Deref, DerefMut};

use crate::layout::ObjectBuffer;
use crate::value::FieldType;

/// Mutable access to a nested table field.
///
/// Holds a decoded copy of the field and stores it back into the parent
/// buffer when dropped, so `camera.origin_mut().set_x(1.0)` updates `camera`.
pub struct NestedMut<'a, T: FieldType + Default> {
    parent: &'a mut ObjectBuffer,
    index: usize,
    value: T,
}

impl<'a, T: FieldType + Default> NestedMut<'a, T> {
    /// Panics if the field at `index` does not decode as `T`.
    pub fn new(parent: &'a mut ObjectBuffer, index: usize) -> Self {
        let value = T::from_value(parent.field(index)).expect("nested field matches its wrapper type");
        NestedMut { parent, index, value }
    }
}

impl<T: FieldType + Default> Deref for NestedMut<'_, T> {
    type Target = T;

    fn deref(&self) -> &T {
        &self.value
    }
}

impl<T: FieldType + Default> DerefMut for NestedMut<'_, T> {
    fn deref_mut(&mut self) -> &mut T {
        &mut self.value
    }
}

impl<T: FieldType + Default> Drop for NestedMut<'_, T> {
    fn drop(&mut self) {
        let value = std::mem::take(&mut self.value).into_value();
        self.parent
            .set_field(self.index, value)
            .expect("nested value has the field's type");
    }
}
