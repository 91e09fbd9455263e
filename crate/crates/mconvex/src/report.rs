//! Registry of expandable families and series-vs-oracle comparison drivers.
