use crate::Error;

/// An integer array whose adjacent entries differ by exactly one, padded
/// at the end with strictly ascending values.
///
/// Padding never creates an answer: a query with no answer in the original
/// array has every later original value above its target, and the padding
/// keeps climbing from the last of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmOneArray {
    values: Vec<i64>,
    original_len: usize,
    min: i64,
}

impl PmOneArray {
    /// Validates `values` and pads them to the next power of two.
    pub fn new(values: &[i64]) -> Result<Self, Error> {
        Self::padded_to(values, values.len().next_power_of_two())
    }

    /// Validates `values` and pads them to exactly `len` entries.
    pub fn padded_to(values: &[i64], len: usize) -> Result<Self, Error> {
        check_plus_minus_one(values)?;
        assert!(len >= values.len(), "padding target shorter than input");
        if len > u32::MAX as usize {
            return Err(Error::TooLarge { len });
        }
        let mut padded = Vec::with_capacity(len);
        padded.extend_from_slice(values);
        let last = values[values.len() - 1];
        padded.extend((1..=(len - values.len()) as i64).map(|step| last + step));
        let min = values.iter().copied().min().unwrap_or(last);
        Ok(PmOneArray {
            values: padded,
            original_len: values.len(),
            min,
        })
    }

    /// Length after padding.
    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn original_len(&self) -> usize {
        self.original_len
    }

    #[inline]
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Smallest value; padding never lowers it.
    #[inline]
    pub fn min(&self) -> i64 {
        self.min
    }

    #[inline]
    pub fn max(&self) -> i64 {
        self.values.iter().copied().max().unwrap_or(self.min)
    }

    /// Maps an internal position to a public answer, hiding padding.
    #[inline]
    pub(crate) fn decode(&self, pos: usize) -> Option<usize> {
        (pos < self.original_len).then_some(pos)
    }
}

impl std::ops::Index<usize> for PmOneArray {
    type Output = i64;

    #[inline]
    fn index(&self, i: usize) -> &i64 {
        &self.values[i]
    }
}

/// Rejects empty input and any adjacent pair not differing by exactly one.
pub fn check_plus_minus_one(values: &[i64]) -> Result<(), Error> {
    if values.is_empty() {
        return Err(Error::EmptyArray);
    }
    match values.windows(2).position(|w| (w[1] - w[0]).abs() != 1) {
        Some(position) => Err(Error::NotPlusMinusOne { position }),
        None => Ok(()),
    }
}
