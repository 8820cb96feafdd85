package com.minimart.payments;

import java.math.BigDecimal;
import java.time.Instant;
import org.springframework.data.mongodb.core.mapping.Document;

@Document(collection = "payments")
public class PaymentRecord {
    private String id;
    private BigDecimal amount;
    private Instant createdAt;
}
