namespace carthom {}
